#ifndef ALCOVED_SHELLING_HPP
#define ALCOVED_SHELLING_HPP

#include <optional>
#include <string>
#include <vector>

#include "alcoved/alcove.hpp"
#include "alcoved/polytope.hpp"
#include "alcoved/series.hpp"

namespace alcoved {

struct Edge {
  size_t u = 0;
  size_t v = 0;
  long weight = 0;
  FacetSupport facet;
};

/**
 * The dual graph of the alcove triangulation of a polytope, rooted for
 * breadth-first search.
 *
 * Nodes are in BFS discovery order, lexicographic by m-vector within each
 * distance level. `covers[v]` lists the neighbours one level closer to the
 * root. Graphs built with make_graph() from an explicit edge list have no
 * alcoves attached (`nodes` is empty).
 */
struct DualGraph {
  std::vector<Alcove> nodes;
  std::vector<Edge> edges;
  size_t root = 0;
  std::vector<long> dist;
  std::vector<std::vector<size_t>> covers;
  /// Edge indices incident to each node.
  std::vector<std::vector<size_t>> incident;

  size_t size() const { return dist.size(); }
  /// The edge joining u and v; throws if absent.
  const Edge& edge_between(size_t u, size_t v) const;
  /// Index of the node whose alcove has m-vector m, if any.
  std::optional<size_t> find(const IntVector& m) const;
};

/// Builds distance and cover data for an explicit weighted graph.
DualGraph make_graph(size_t node_count, std::vector<Edge> edges, size_t root,
                     std::vector<Alcove> nodes = {});

/// Same nodes and edges, rooted at `root`.
DualGraph reroot(const DualGraph& g, size_t root);

constexpr size_t kDefaultAlcoveCap = 1000000;

DualGraph dual_graph(const AlcovedPolytope& p, const Alcove& seed, size_t cap = kDefaultAlcoveCap);
DualGraph dual_graph(const AlcovedPolytope& p, const Point& seed, size_t cap = kDefaultAlcoveCap);
DualGraph dual_graph(const AlcovedPolytope& p, size_t cap = kDefaultAlcoveCap);

/// wt(v): total weight of the edges from v to the nodes it covers.
std::vector<long> bfs_weights(const DualGraph& g);

/// sum over nodes of z^{wt(v)}
Polynomial numerator(const DualGraph& g);

RationalSeries ehrhart_series(const AlcovedPolytope& p, const std::optional<Point>& seed = std::nullopt,
                              size_t cap = kDefaultAlcoveCap);

/// Per node, the facets shared with the nodes it covers. Removing them from
/// each closed alcove partitions the polytope.
std::vector<std::vector<FacetSupport>> half_open_decomposition(const DualGraph& g);

/// Graphviz rendering; node labels are m-vectors, edge labels weights.
std::string to_dot(const DualGraph& g);

}  // namespace alcoved

#endif  // ALCOVED_SHELLING_HPP
