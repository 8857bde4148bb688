#include "alcoved/jobspec.hpp"

#include <algorithm>
#include <sstream>

namespace alcoved {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

long get_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<long>();
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

Point get_point(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of \"p/q\" strings");
  Point p;
  for (size_t i = 0; i < v.size(); ++i) {
    const std::string sub = path + "[" + std::to_string(i) + "]";
    try {
      p.push_back(parse_rational(get_string(v[i], sub)));
    } catch (const InputError& e) {
      fail(sub, e.what());
    }
  }
  return p;
}

json point_to_json(const Point& p) {
  json a = json::array();
  for (const auto& x : p) a.push_back(x.get_str());
  return a;
}

}  // namespace

Point parse_point(const std::string& text) {
  Point p;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) p.push_back(parse_rational(part));
  if (p.empty()) throw InputError("empty point '" + text + "'");
  return p;
}

JobSpec parse_job_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    long line = 1 + std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n');
    throw InputError("line " + std::to_string(line) + ": " + e.what());
  }
  JobSpec spec;
  spec.schema = static_cast<int>(get_int(require(doc, "schema", ""), "schema"));
  if (spec.schema != 1) fail("schema", "unsupported schema version " + std::to_string(spec.schema));

  if (doc.contains("root_system")) {
    const json& r = doc["root_system"];
    RootSystemSpec rs;
    std::string fam = get_string(require(r, "family", "root_system"), "root_system.family");
    try {
      rs.family = parse_family(fam);
    } catch (const InputError& e) {
      fail("root_system.family", e.what());
    }
    rs.rank = static_cast<int>(get_int(require(r, "rank", "root_system"), "root_system.rank"));
    spec.root_system = rs;
  }

  const json& poly = require(doc, "polytope", "");
  if (!poly.is_object() || poly.size() != 1) {
    fail("polytope", "expected exactly one of 'builtin', 'bounds', 'vertices'");
  }
  if (poly.contains("builtin")) {
    const json& b = poly["builtin"];
    BuiltinSpec bs;
    bs.name = get_string(require(b, "name", "polytope.builtin"), "polytope.builtin.name");
    if (bs.name == "hypersimplex") {
      bs.k = static_cast<int>(get_int(require(b, "k", "polytope.builtin"), "polytope.builtin.k"));
      bs.n = static_cast<int>(get_int(require(b, "n", "polytope.builtin"), "polytope.builtin.n"));
    } else if (bs.name == "hypercube") {
      bs.n = static_cast<int>(get_int(require(b, "n", "polytope.builtin"), "polytope.builtin.n"));
    } else if (bs.name == "fundamental") {
      if (!spec.root_system) fail("root_system", "required for the fundamental alcove");
    } else {
      fail("polytope.builtin.name", "unknown builtin '" + bs.name + "'");
    }
    spec.polytope = bs;
  } else if (poly.contains("bounds")) {
    if (!spec.root_system) fail("root_system", "required for a bounds polytope");
    const json& arr = poly["bounds"];
    if (!arr.is_array()) fail("polytope.bounds", "expected an array");
    std::vector<BoundSpec> bounds;
    for (size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "polytope.bounds[" + std::to_string(i) + "]";
      BoundSpec bs;
      const json& root = require(arr[i], "root", path);
      if (!root.is_array()) fail(path + ".root", "expected an integer array");
      for (size_t j = 0; j < root.size(); ++j) {
        bs.root.push_back(get_int(root[j], path + ".root[" + std::to_string(j) + "]"));
      }
      bs.min = get_int(require(arr[i], "min", path), path + ".min");
      bs.max = get_int(require(arr[i], "max", path), path + ".max");
      bounds.push_back(std::move(bs));
    }
    spec.polytope = std::move(bounds);
  } else if (poly.contains("vertices")) {
    if (!spec.root_system) fail("root_system", "required for a vertices polytope");
    const json& v = poly["vertices"];
    VerticesSpec vs;
    if (v.contains("coords")) vs.coords = get_string(v["coords"], "polytope.vertices.coords");
    if (vs.coords != "omega" && vs.coords != "euclidean") {
      fail("polytope.vertices.coords", "expected 'omega' or 'euclidean'");
    }
    const json& pts = require(v, "points", "polytope.vertices");
    if (!pts.is_array()) fail("polytope.vertices.points", "expected an array");
    for (size_t i = 0; i < pts.size(); ++i) {
      vs.points.push_back(get_point(pts[i], "polytope.vertices.points[" + std::to_string(i) + "]"));
    }
    spec.polytope = std::move(vs);
  } else {
    fail("polytope", "expected one of 'builtin', 'bounds', 'vertices'");
  }

  if (doc.contains("T")) spec.T = get_int(doc["T"], "T");
  if (doc.contains("seed")) spec.seed = get_point(doc["seed"], "seed");
  if (doc.contains("dot")) spec.dot = get_string(doc["dot"], "dot");
  return spec;
}

json to_json(const JobSpec& spec) {
  json doc;
  doc["schema"] = spec.schema;
  if (spec.root_system) {
    doc["root_system"] = {{"family", std::string(1, family_letter(spec.root_system->family))},
                          {"rank", spec.root_system->rank}};
  }
  if (const auto* b = std::get_if<BuiltinSpec>(&spec.polytope)) {
    json j = {{"name", b->name}};
    if (b->name == "hypersimplex") j["k"] = b->k;
    if (b->name != "fundamental") j["n"] = b->n;
    doc["polytope"] = {{"builtin", j}};
  } else if (const auto* bs = std::get_if<std::vector<BoundSpec>>(&spec.polytope)) {
    json arr = json::array();
    for (const auto& b : *bs) arr.push_back({{"root", b.root}, {"min", b.min}, {"max", b.max}});
    doc["polytope"] = {{"bounds", arr}};
  } else {
    const auto& vs = std::get<VerticesSpec>(spec.polytope);
    json pts = json::array();
    for (const auto& p : vs.points) pts.push_back(point_to_json(p));
    doc["polytope"] = {{"vertices", {{"coords", vs.coords}, {"points", pts}}}};
  }
  if (spec.T) doc["T"] = *spec.T;
  if (spec.seed) doc["seed"] = point_to_json(*spec.seed);
  if (spec.dot) doc["dot"] = *spec.dot;
  return doc;
}

AlcovedPolytope build_polytope(const JobSpec& spec) {
  if (const auto* b = std::get_if<BuiltinSpec>(&spec.polytope)) {
    if (b->name == "hypersimplex") return hypersimplex(b->k, b->n);
    if (b->name == "hypercube") return hypercube(b->n);
    return fundamental_polytope(build_root_system(spec.root_system->family, spec.root_system->rank));
  }
  const auto rs = build_root_system(spec.root_system->family, spec.root_system->rank);
  if (const auto* bs = std::get_if<std::vector<BoundSpec>>(&spec.polytope)) {
    std::vector<RootBound> rb;
    for (const auto& b : *bs) {
      if (static_cast<int>(b.root.size()) != rs.rank) throw InputError("bound root has wrong length");
      rb.push_back({b.root, Bound{b.min, b.max}});
    }
    return from_bounds(rs, rb);
  }
  const auto& vs = std::get<VerticesSpec>(spec.polytope);
  std::vector<Point> pts;
  for (const auto& p : vs.points) {
    pts.push_back(vs.coords == "euclidean" ? to_omega_coords(rs.family, rs.rank, p) : p);
  }
  return from_vertices(rs, pts);
}

}  // namespace alcoved
