// Acceptance checks: one [PASS]/[FAIL] line per criterion.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "alcoved/commands.hpp"
#include "alcoved/dosp.hpp"
#include "alcoved/oracle.hpp"
#include "alcoved/shelling.hpp"

using namespace alcoved;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

AlcovedPolytope fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  if (!in) throw InputError("missing fixture " + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return build_polytope(parse_job_spec(buf.str()));
}

Dosp pair_of(std::vector<int> a, int n) { return two_block(a, n); }

Polynomial eulerian_polynomial(int n) {
  std::vector<Integer> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(m, 0);
    for (int j = 0; j < m; ++j) {
      if (j < static_cast<int>(row.size())) next[j] += (j + 1) * row[j];
      if (j > 0 && j - 1 < static_cast<int>(row.size())) next[j] += (m - j) * row[j - 1];
    }
    row = next;
  }
  return Polynomial(row);
}

std::string show(const std::vector<Integer>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return "[" + s + "]";
}

int failures = 0;

void run(const std::string& id, const std::string& title, double limit_s, const std::function<Check()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    std::ostringstream msg;
    msg << "took longer than " << limit_s << " s";
    c.expect(false, msg.str());
  }
  std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << std::fixed << std::setprecision(3)
            << secs << " s)";
  if (!c.ok) std::cout << ": " << c.detail;
  std::cout << "\n";
  failures += !c.ok;
}

std::vector<AlcovedPolytope> small_builtins() {
  std::vector<AlcovedPolytope> all{fixture("fig1_b2_square.json"), fixture("fig2_g2_trapezoid.json"),
                                   fixture("fig3_b3_hypersimplex.json"), fixture("fig4_hypersimplex_2_5.json")};
  for (int n = 2; n <= 4; ++n) all.push_back(hypercube(n));
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {3, 5}, {1, 6}}) all.push_back(hypersimplex(k, n));
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::B, 3}, {Family::C, 3}, {Family::G, 2}, {Family::F, 4}}) {
    all.push_back(fundamental_polytope(build_root_system(fam, rank)));
  }
  return all;
}

}  // namespace

int main() {
  run("AC1", "B2 square series", 1.0, [] {
    Check c;
    auto s = ehrhart_series(fixture("fig1_b2_square.json"));
    RationalSeries want(Polynomial({1, 1, 1}), {1, 1, 2});
    c.expect(equals(s, want), "got " + render(s));
    c.expect(s.numerator == want.numerator && s.denom_exponents == want.denom_exponents, "not in reduced form");
    return c;
  });

  run("AC2", "G2 trapezoid path graph numerator", 1.0, [] {
    Check c;
    auto g = dual_graph(fixture("fig2_g2_trapezoid.json"));
    c.expect(g.size() == 3 && g.edges.size() == 2, "expected a 3-node path");
    std::multiset<long> w;
    for (const auto& e : g.edges) w.insert(e.weight);
    c.expect(w == std::multiset<long>{2, 3}, "edge weights differ from {3, 2}");
    for (size_t v = 0; v < g.size(); ++v) {
      if (g.incident[v].size() != 1) continue;
      auto r = reroot(g, v);
      c.expect(numerator(r) == Polynomial({1, 0, 1, 1}), "endpoint numerator " + numerator(r).to_string());
    }
    auto reference = make_graph(3, {{0, 1, 3, {}}, {1, 2, 2, {}}}, 0);
    c.expect(numerator(reference) == Polynomial({1, 0, 1, 1}), "weighted path numerator");
    return c;
  });

  run("AC3", "B3 generalized hypersimplex", 5.0, [] {
    Check c;
    auto p = fixture("fig3_b3_hypersimplex.json");
    auto g = dual_graph(p);
    c.expect(g.size() == 6, "alcove count " + std::to_string(g.size()));
    auto s = RationalSeries(numerator(g), p.rs.ell);
    c.expect(s.numerator == Polynomial({1, 1, 3, 1}) && s.denom_exponents == IntVector{1, 1, 2, 2}, "got " + render(s));
    return c;
  });

  run("AC4", "numerator independent of the root alcove", 0, [] {
    Check c;
    for (const auto& p : small_builtins()) {
      auto g = dual_graph(p);
      if (g.size() > 30) continue;
      const Polynomial want = numerator(g);
      for (size_t s = 0; s < g.size(); ++s) {
        auto other = numerator(dual_graph(p, g.nodes[s]));
        c.expect(other == want, p.rs.name() + " root " + std::to_string(s) + ": " + other.to_string());
      }
    }
    return c;
  });

  run("AC5", "series expansion matches direct counts, t <= 8", 120.0, [] {
    Check c;
    std::vector<std::pair<std::string, AlcovedPolytope>> cases{
        {"B2 square", fixture("fig1_b2_square.json")}, {"B3 hypersimplex", fixture("fig3_b3_hypersimplex.json")}};
    for (int n = 2; n <= 4; ++n) cases.push_back({"cube " + std::to_string(n), hypercube(n)});
    for (int n = 4; n <= 6; ++n) cases.push_back({"hypersimplex(2," + std::to_string(n) + ")", hypersimplex(2, n)});
    for (auto [fam, rank] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::B, 2}, {Family::B, 3}, {Family::G, 2}}) {
      auto rs = build_root_system(fam, rank);
      cases.push_back({rs.name() + " alcove", fundamental_polytope(rs)});
    }
    for (const auto& [name, p] : cases) {
      auto s = ehrhart_series(p);
      auto e = expand(s, 8);
      std::vector<Integer> direct;
      for (long t = 0; t <= 8; ++t) direct.push_back(count_points(p, t));
      c.expect(e == direct, name + ": series " + show(e) + " vs direct " + show(direct));
    }
    return c;
  });

  run("AC6", "half-open fundamental alcoves, all facet subsets, t <= 6", 0, [] {
    Check c;
    for (auto fam : {Family::B, Family::G}) {
      auto rs = build_root_system(fam, 2);
      for (int mask = 0; mask < (1 << (rs.rank + 1)); ++mask) {
        std::set<int> removed;
        long shift = 0;
        for (int i = 0; i <= rs.rank; ++i) {
          if (mask >> i & 1) {
            removed.insert(i);
            shift += rs.ell[i];
          }
        }
        auto e = expand(RationalSeries(Polynomial::monomial(shift), rs.ell), 6);
        for (long t = 0; t <= 6; ++t) {
          Integer direct = count_half_open_fundamental(rs, removed, t);
          c.expect(direct == e[t], rs.name() + " mask " + std::to_string(mask) + " t=" + std::to_string(t));
        }
      }
    }
    return c;
  });

  run("AC7", "half-open alcoves partition the dilates", 0, [] {
    Check c;
    std::vector<std::tuple<std::string, AlcovedPolytope, long>> cases{
        {"B2 square", fixture("fig1_b2_square.json"), 4},
        {"B3 hypersimplex", fixture("fig3_b3_hypersimplex.json"), 3},
        {"hypersimplex(2,5)", hypersimplex(2, 5), 2}};
    for (const auto& [name, p, T] : cases) {
      auto g = dual_graph(p);
      for (long t = 0; t <= T; ++t) {
        auto r = partition_check(p, g, t);
        std::string where;
        for (auto x : r.bad_point) where += std::to_string(x) + " ";
        c.expect(r.ok, name + " t=" + std::to_string(t) + " point " + where + "in " + std::to_string(r.bad_count));
      }
    }
    return c;
  });

  run("AC8", "cube h* is the Eulerian polynomial", 0, [] {
    Check c;
    for (int n = 2; n <= 4; ++n) {
      auto h = h_star(ehrhart_series(hypercube(n)));
      c.expect(h == eulerian_polynomial(n), "n=" + std::to_string(n) + ": " + h.to_string());
    }
    return c;
  });

  run("AC9", "winding-graded DOSP counts equal hypersimplex h*", 60.0, [] {
    Check c;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 6}}) {
      auto h = h_star(ehrhart_series(hypersimplex(k, n)));
      auto hist = winding_histogram(enumerate_dosps(k, n, true));
      std::vector<Integer> w;
      for (const auto& [d, count] : hist) {
        if (static_cast<long>(w.size()) <= d) w.resize(d + 1, 0);
        w[d] = count;
      }
      c.expect(Polynomial(w) == h, "(" + std::to_string(k) + "," + std::to_string(n) + "): h* " + h.to_string() +
                                       " vs " + Polynomial(w).to_string());
    }
    return c;
  });

  run("AC10", "psi worked examples", 0, [] {
    Check c;
    auto a = psi({pair_of({2, 3}, 5), pair_of({1, 2}, 5)}, 5);
    c.expect(a == pair_of({1, 3}, 5), "first example gave " + a.to_string());
    auto b = psi({pair_of({1, 2, 3}, 6), pair_of({2, 3, 4}, 6)}, 6);
    c.expect(b == pair_of({1, 4}, 6), "second example gave " + b.to_string());
    auto d = psi({pair_of({1, 2, 3}, 6), pair_of({2, 3, 4}, 6), pair_of({3, 4, 5}, 6)}, 6);
    c.expect(d == pair_of({1, 3, 5}, 6), "third example gave " + d.to_string());
    return c;
  });

  run("AC11", "conjecture harness for n = 5, 6, 7", 0, [] {
    Check c;
    for (int n = 5; n <= 7; ++n) {
      auto r = cmd_conjecture(n, {}, true);
      auto j = nlohmann::json::parse(r.output);
      c.expect(j["roots"].size() == j["alcoves"].get<size_t>(), "missing per-root verdicts for n=" + std::to_string(n));
      const std::string text = cmd_conjecture(n, {}, false).output;
      const size_t last = text.rfind('\n', text.size() - 2);
      std::cout << "       n=" << n << ": " << text.substr(last + 1);
    }
    auto r5 = check_conjecture(5);
    const std::map<long, long> want{{0, 1}, {1, 5}, {2, 5}};
    for (const auto& v : r5.roots) c.expect(v.histogram == want, "histogram at root " + std::to_string(v.root));

    auto h = hypersimplex_graph(5);
    size_t center = h.graph.size();
    for (size_t v = 0; v < h.graph.size(); ++v) {
      if (h.graph.incident[v].size() == 5) center = v;
    }
    c.expect(center < h.graph.size(), "no center node");
    if (center == h.graph.size()) return c;
    auto g = reroot(h.graph, center);
    auto labels = node_labels(h, g);
    const Dosp top({{1, 2, 3, 4, 5}}, {2});
    std::set<std::pair<Dosp, Dosp>> drawn;
    for (auto b : {std::vector<int>{3, 4}, {2, 3}, {1, 2}, {1, 5}, {4, 5}}) drawn.insert({top, pair_of(b, 5)});
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> outer = {
        {{2, 3}, {1, 3}}, {{2, 3}, {2, 4}}, {{3, 4}, {3, 5}}, {{3, 4}, {2, 4}}, {{4, 5}, {3, 5}},
        {{4, 5}, {1, 4}}, {{1, 5}, {2, 5}}, {{1, 5}, {1, 4}}, {{1, 2}, {2, 5}}, {{1, 2}, {1, 3}}};
    for (const auto& [from, to] : outer) drawn.insert({pair_of(from, 5), pair_of(to, 5)});
    std::set<std::pair<Dosp, Dosp>> computed;
    for (size_t v = 0; v < g.size(); ++v) {
      for (size_t u : g.covers[v]) computed.insert({labels[u], labels[v]});
    }
    c.expect(labels[g.root] == top, "root label " + labels[g.root].to_string());
    c.expect(computed == drawn, "center-root labelling differs from the drawn one");
    return c;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
