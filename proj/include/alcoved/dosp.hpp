#ifndef ALCOVED_DOSP_HPP
#define ALCOVED_DOSP_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "alcoved/polytope.hpp"
#include "alcoved/shelling.hpp"

namespace alcoved {

/**
 * A decorated ordered set partition of [n]: blocks on a circle, each block
 * followed by the clockwise distance `decorations[i]` to the next block.
 * Values are kept in canonical rotation (the block containing 1 first) so
 * equality is equality up to cyclic rotation.
 */
struct Dosp {
  std::vector<std::vector<int>> blocks;
  IntVector decorations;

  Dosp() = default;
  Dosp(std::vector<std::vector<int>> blocks, IntVector decorations);

  int n() const;
  long k() const;
  bool is_hypersimplicial() const;

  auto operator<=>(const Dosp&) const = default;
  bool operator==(const Dosp&) const = default;

  /// "{1,3}_1,{2,4,5}_1"
  std::string to_string() const;
};

/// The two-block partition {block, [n] \ block} with decorations (1,1), or
/// ([n])_2 if block is empty or everything.
Dosp two_block(const std::vector<int>& block, int n);

struct WindingData {
  IntVector vector;
  long number = 0;
};

WindingData winding(const Dosp& p);

/// All DOSPs of type (k, n) up to rotation, sorted.
std::vector<Dosp> enumerate_dosps(int k, int n, bool hypersimplicial_only);

/// Counts by winding number.
std::map<long, long> winding_histogram(const std::vector<Dosp>& ps);

/// Iterated symmetric difference of the first blocks of two-block type (2,n)
/// DOSPs. The empty list gives ([n])_2.
Dosp psi(const std::vector<Dosp>& inputs, int n);

/// Label of an interior wall y_j - y_i = 1 of Delta_{2,n}: {{i..j-1},{j..i-1}}.
/// `rs` must be A_{n-1}.
Dosp facet_label(const RootSystemData& rs, const FacetSupport& facet, int n);

/// Dual graph of Delta_{2,n} with its facet labels, shared by the queries below.
struct HypersimplexGraph {
  int n = 0;
  AlcovedPolytope polytope;
  DualGraph graph;
  /// Label of each edge of graph.edges.
  std::vector<Dosp> edge_labels;
};

HypersimplexGraph hypersimplex_graph(int n);

bool adjacent(const Dosp& a, const Dosp& b, int n);
bool adjacent(const HypersimplexGraph& h, const Dosp& a, const Dosp& b);

/// psi of the cover-facet labels of every node, for the graph's root.
std::vector<Dosp> node_labels(const HypersimplexGraph& h, const DualGraph& rooted);

struct ConjectureFailure {
  size_t node = 0;
  long cover_count = 0;
  std::vector<Dosp> cover_labels;
  Dosp image;
  /// "collision", "wrong winding", "not hypersimplicial" or "omission".
  std::string kind;
  /// For collisions, the other node with the same image.
  size_t other_node = 0;
};

struct RootVerdict {
  size_t root = 0;
  std::map<long, long> histogram;
  std::map<long, bool> bijective;
  std::vector<ConjectureFailure> failures;
  bool holds() const { return failures.empty(); }
};

struct ConjectureReport {
  int n = 0;
  size_t alcoves = 0;
  std::map<long, long> expected;
  std::vector<RootVerdict> roots;
  bool holds() const;
};

/// Tests the psi bijection for the given root alcoves (node indices of the
/// default-seeded graph); an empty list means every alcove.
ConjectureReport check_conjecture(int n, const std::vector<size_t>& roots = {});

}  // namespace alcoved

#endif  // ALCOVED_DOSP_HPP
