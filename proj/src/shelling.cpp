#include "alcoved/shelling.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace alcoved {

const Edge& DualGraph::edge_between(size_t u, size_t v) const {
  for (size_t e : incident[u]) {
    const Edge& ed = edges[e];
    if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return ed;
  }
  throw DomainError("no edge between nodes " + std::to_string(u) + " and " + std::to_string(v));
}

std::optional<size_t> DualGraph::find(const IntVector& m) const {
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].m == m) return i;
  }
  return std::nullopt;
}

DualGraph make_graph(size_t node_count, std::vector<Edge> edges, size_t root, std::vector<Alcove> nodes) {
  if (root >= node_count) throw DomainError("root out of range");
  if (!nodes.empty() && nodes.size() != node_count) throw DomainError("node list size mismatch");
  DualGraph g;
  g.nodes = std::move(nodes);
  g.edges = std::move(edges);
  g.root = root;
  g.incident.assign(node_count, {});
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& ed = g.edges[e];
    if (ed.u >= node_count || ed.v >= node_count || ed.u == ed.v) throw DomainError("bad edge");
    g.incident[ed.u].push_back(e);
    g.incident[ed.v].push_back(e);
  }
  constexpr long kUnseen = std::numeric_limits<long>::max();
  g.dist.assign(node_count, kUnseen);
  g.dist[root] = 0;
  std::deque<size_t> queue{root};
  while (!queue.empty()) {
    size_t u = queue.front();
    queue.pop_front();
    for (size_t e : g.incident[u]) {
      size_t w = g.edges[e].u == u ? g.edges[e].v : g.edges[e].u;
      if (g.dist[w] == kUnseen) {
        g.dist[w] = g.dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  if (std::count(g.dist.begin(), g.dist.end(), kUnseen) > 0) throw DomainError("graph is disconnected");
  g.covers.assign(node_count, {});
  for (size_t v = 0; v < node_count; ++v) {
    for (size_t e : g.incident[v]) {
      size_t u = g.edges[e].u == v ? g.edges[e].v : g.edges[e].u;
      if (g.dist[u] + 1 == g.dist[v]) g.covers[v].push_back(u);
    }
    std::sort(g.covers[v].begin(), g.covers[v].end());
  }
  return g;
}

DualGraph reroot(const DualGraph& g, size_t root) {
  return make_graph(g.size(), g.edges, root, g.nodes);
}

DualGraph dual_graph(const AlcovedPolytope& p, const Alcove& seed, size_t cap) {
  const auto& rs = p.rs;
  if (!contains_alcove(p, seed.m)) throw DomainError("seed alcove lies outside the polytope");

  struct Pending {
    size_t from;
    IntVector to;
    FacetSupport facet;
  };
  std::vector<Alcove> order;
  std::map<IntVector, size_t> index;
  std::vector<Pending> pending;

  std::vector<Alcove> level{seed};
  index[seed.m] = 0;
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), [](const Alcove& a, const Alcove& b) { return a.m < b.m; });
    std::vector<Alcove> next;
    for (auto& a : level) {
      const size_t ia = order.size();
      index[a.m] = ia;
      for (int t = 0; t <= rs.rank; ++t) {
        FacetSupport f = facet_support(rs, a, t);
        Alcove b = neighbor(rs, a, t);
        if (!contains_alcove(p, b.m)) continue;
        pending.push_back({ia, b.m, f});
        if (index.emplace(b.m, 0).second) {
          if (index.size() > cap) throw DomainError("polytope too large: more than " + std::to_string(cap) + " alcoves");
          next.push_back(std::move(b));
        }
      }
      order.push_back(std::move(a));
    }
    level = std::move(next);
  }

  std::vector<Edge> edges;
  for (const auto& pe : pending) {
    size_t j = index.at(pe.to);
    if (pe.from < j) edges.push_back({pe.from, j, rs.ell[pe.facet.opposite_type], pe.facet});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  const size_t count = order.size();
  return make_graph(count, std::move(edges), 0, std::move(order));
}

DualGraph dual_graph(const AlcovedPolytope& p, const Point& seed, size_t cap) {
  return dual_graph(p, locate(p.rs, seed), cap);
}

DualGraph dual_graph(const AlcovedPolytope& p, size_t cap) {
  return dual_graph(p, default_seed_alcove(p, cap), cap);
}

std::vector<long> bfs_weights(const DualGraph& g) {
  std::vector<long> wt(g.size(), 0);
  for (size_t v = 0; v < g.size(); ++v) {
    for (size_t u : g.covers[v]) wt[v] += g.edge_between(u, v).weight;
  }
  return wt;
}

Polynomial numerator(const DualGraph& g) {
  Polynomial p;
  for (long w : bfs_weights(g)) p += Polynomial::monomial(w);
  return p;
}

RationalSeries ehrhart_series(const AlcovedPolytope& p, const std::optional<Point>& seed, size_t cap) {
  DualGraph g = seed ? dual_graph(p, *seed, cap) : dual_graph(p, cap);
  return RationalSeries(numerator(g), p.rs.ell);
}

std::vector<std::vector<FacetSupport>> half_open_decomposition(const DualGraph& g) {
  std::vector<std::vector<FacetSupport>> removed(g.size());
  for (size_t v = 0; v < g.size(); ++v) {
    for (size_t u : g.covers[v]) removed[v].push_back(g.edge_between(u, v).facet);
  }
  return removed;
}

std::string to_dot(const DualGraph& g) {
  std::ostringstream out;
  out << "graph dual {\n";
  for (size_t v = 0; v < g.size(); ++v) {
    out << "  n" << v << " [label=\"";
    if (!g.nodes.empty()) {
      const auto& m = g.nodes[v].m;
      for (size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
    } else {
      out << v;
    }
    out << "\"" << (v == g.root ? ", shape=doublecircle" : "") << "];\n";
  }
  for (const auto& e : g.edges) {
    out << "  n" << e.u << " -- n" << e.v << " [label=\"" << e.weight << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace alcoved
