#include "alcoved/commands.hpp"

#include <fstream>
#include <sstream>

#include "alcoved/dosp.hpp"
#include "alcoved/oracle.hpp"
#include "alcoved/shelling.hpp"

namespace alcoved {

using nlohmann::json;

namespace {

std::optional<Point> seed_of(const JobSpec& spec, const RunOptions& opts) {
  return opts.seed ? opts.seed : spec.seed;
}

DualGraph graph_for(const AlcovedPolytope& p, const std::optional<Point>& seed) {
  return seed ? dual_graph(p, *seed) : dual_graph(p);
}

json poly_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

json series_json(const RationalSeries& s) {
  return {{"numerator", poly_json(s.numerator)},
          {"denominator_exponents", s.denom_exponents},
          {"text", render(s)}};
}

json dosp_json(const Dosp& d) {
  return {{"blocks", d.blocks}, {"decorations", d.decorations}, {"text", d.to_string()}};
}

std::string histogram_text(const std::map<long, long>& h) {
  std::string out;
  if (h.empty()) return out;
  for (long d = 0; d <= h.rbegin()->first; ++d) {
    auto it = h.find(d);
    out += (d ? "/" : "") + std::to_string(it == h.end() ? 0 : it->second);
  }
  return out;
}

json histogram_json(const std::map<long, long>& h) {
  json o = json::object();
  for (const auto& [d, c] : h) o[std::to_string(d)] = c;
  return o;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << body;
}

}  // namespace

CommandResult cmd_ehrhart(const JobSpec& spec, const RunOptions& opts) {
  const AlcovedPolytope p = build_polytope(spec);
  const DualGraph g = graph_for(p, seed_of(spec, opts));
  const RationalSeries s(numerator(g), p.rs.ell);
  auto dot_path = opts.dot_path ? opts.dot_path : spec.dot;
  if (dot_path) write_file(*dot_path, to_dot(g));
  CommandResult r;
  if (opts.json) {
    json j = series_json(s);
    j["root_system"] = p.rs.name();
    j["alcoves"] = g.size();
    r.output = j.dump(2) + "\n";
  } else {
    r.output = render(s) + "\n";
  }
  return r;
}

CommandResult cmd_verify(const JobSpec& spec, const RunOptions& opts) {
  const AlcovedPolytope p = build_polytope(spec);
  const long T = opts.T ? *opts.T : spec.T.value_or(8);
  const CountReport report = verify(p, seed_of(spec, opts), T);
  CommandResult r;
  r.exit_code = report.all_match() ? kExitOk : kExitFailure;
  if (opts.json) {
    json rows = json::array();
    for (const auto& row : report.rows) {
      rows.push_back({{"t", row.t}, {"oracle", row.oracle.get_str()}, {"series", row.series.get_str()},
                      {"match", row.match}});
    }
    r.output = json{{"rows", rows}, {"all_match", report.all_match()}}.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "t\toracle\tseries\tok\n";
    for (const auto& row : report.rows) {
      out << row.t << "\t" << row.oracle << "\t" << row.series << "\t" << (row.match ? "ok" : "MISMATCH") << "\n";
    }
    out << (report.all_match() ? "all match" : "mismatch") << "\n";
    r.output = out.str();
  }
  return r;
}

CommandResult cmd_alcoves(const JobSpec& spec, const RunOptions& opts) {
  const AlcovedPolytope p = build_polytope(spec);
  const DualGraph g = graph_for(p, seed_of(spec, opts));
  const auto wt = bfs_weights(g);
  CommandResult r;
  if (opts.json) {
    json nodes = json::array();
    for (size_t v = 0; v < g.size(); ++v) {
      json verts = json::array();
      for (size_t t = 0; t < g.nodes[v].vertices.size(); ++t) {
        json coord = json::array();
        for (const auto& x : g.nodes[v].vertices[t]) coord.push_back(x.get_str());
        verts.push_back({{"type", t}, {"coord", coord}});
      }
      nodes.push_back({{"index", v}, {"m", g.nodes[v].m}, {"dist", g.dist[v]}, {"wt", wt[v]},
                       {"covers", g.covers[v]}, {"vertices", verts}});
    }
    json edges = json::array();
    for (const auto& e : g.edges) {
      edges.push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}, {"root", e.facet.root_index},
                       {"level", e.facet.level}, {"type", e.facet.opposite_type}});
    }
    r.output = json{{"root_system", p.rs.name()}, {"nodes", nodes}, {"edges", edges}}.dump(2) + "\n";
    return r;
  }
  std::ostringstream out;
  out << p.rs.name() << ": " << g.size() << " alcoves, " << g.edges.size() << " interior walls\n";
  for (size_t v = 0; v < g.size(); ++v) {
    out << "#" << v << " dist " << g.dist[v] << " wt " << wt[v] << " m [";
    for (size_t i = 0; i < g.nodes[v].m.size(); ++i) out << (i ? "," : "") << g.nodes[v].m[i];
    out << "] vertices";
    for (size_t t = 0; t < g.nodes[v].vertices.size(); ++t) out << " " << t << ":" << to_string(g.nodes[v].vertices[t]);
    out << "\n";
  }
  r.output = out.str();
  return r;
}

CommandResult cmd_dosp(int k, int n, bool as_json) {
  const auto all = enumerate_dosps(k, n, true);
  const auto hist = winding_histogram(all);
  CommandResult r;
  if (as_json) {
    r.output = json{{"k", k}, {"n", n}, {"total", all.size()}, {"by_winding", histogram_json(hist)}}.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "hypersimplicial DOSPs of type (" << k << "," << n << "): " << all.size() << "\n";
    for (const auto& [d, c] : hist) out << "winding " << d << ": " << c << "\n";
    r.output = out.str();
  }
  return r;
}

CommandResult cmd_conjecture(int n, const std::vector<size_t>& roots, bool as_json) {
  const ConjectureReport report = check_conjecture(n, roots);
  CommandResult r;
  r.exit_code = report.holds() ? kExitOk : kExitFailure;
  size_t good = 0;
  bool same_histogram = true;
  for (const auto& v : report.roots) {
    good += v.holds();
    same_histogram = same_histogram && v.histogram == report.roots.front().histogram;
  }
  if (as_json) {
    json per_root = json::array();
    for (const auto& v : report.roots) {
      json failures = json::array();
      for (const auto& f : v.failures) {
        json labels = json::array();
        for (const auto& l : f.cover_labels) labels.push_back(dosp_json(l));
        json fj = {{"kind", f.kind}, {"cover_count", f.cover_count}, {"image", dosp_json(f.image)}};
        if (f.kind != "omission") {
          fj["node"] = f.node;
          fj["cover_labels"] = labels;
        }
        if (f.kind == "collision") fj["other_node"] = f.other_node;
        failures.push_back(fj);
      }
      json bij = json::object();
      for (const auto& [d, ok] : v.bijective) bij[std::to_string(d)] = ok;
      per_root.push_back({{"root", v.root}, {"holds", v.holds()}, {"histogram", histogram_json(v.histogram)},
                          {"bijective", bij}, {"failures", failures}});
    }
    r.output = json{{"n", n}, {"alcoves", report.alcoves}, {"expected", histogram_json(report.expected)},
                    {"holds", report.holds()}, {"roots", per_root}}
                   .dump(2) + "\n";
    return r;
  }
  std::ostringstream out;
  out << "Delta(2," << n << "): " << report.alcoves << " alcoves; hypersimplicial DOSPs by winding "
      << histogram_text(report.expected) << "\n";
  for (const auto& v : report.roots) {
    out << "root " << v.root << ": " << (v.holds() ? "bijection holds" : "bijection FAILS") << "; histogram "
        << histogram_text(v.histogram) << "\n";
    for (const auto& f : v.failures) {
      out << "  " << f.kind << " at d=" << f.cover_count;
      if (f.kind != "omission") {
        out << " node " << f.node << " covers [";
        for (size_t i = 0; i < f.cover_labels.size(); ++i) out << (i ? " ; " : "") << f.cover_labels[i].to_string();
        out << "]";
      }
      out << " -> " << f.image.to_string();
      if (f.kind == "collision") out << " (same as node " << f.other_node << ")";
      out << "\n";
    }
  }
  out << good << "/" << report.roots.size() << " roots: "
      << (report.holds() ? "bijection holds" : "bijection fails");
  if (same_histogram && !report.roots.empty()) out << "; histogram " << histogram_text(report.roots.front().histogram);
  out << "\n";
  r.output = out.str();
  return r;
}

}  // namespace alcoved
