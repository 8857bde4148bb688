#ifndef ALCOVED_ALCOVE_HPP
#define ALCOVED_ALCOVE_HPP

#include <vector>

#include "alcoved/rational.hpp"
#include "alcoved/rootsys.hpp"

namespace alcoved {

/**
 * A closed alcove with typed vertices.
 *
 * `vertices[i]` is the vertex of type i; type 0 is the image of the origin
 * and type i the image of omega_i / a_i under the affine Weyl group element
 * carrying the fundamental alcove here. `m` holds, per positive root, the
 * integer m_alpha with m_alpha < (x, alpha) < m_alpha + 1 on the interior.
 */
struct Alcove {
  std::vector<Point> vertices;
  IntVector m;

  Point barycenter() const;
  bool operator==(const Alcove& o) const { return m == o.m; }
};

/// The wall of an alcove opposite the vertex of type `opposite_type`.
struct FacetSupport {
  size_t root_index = 0;
  long level = 0;
  int opposite_type = 0;

  bool operator==(const FacetSupport&) const = default;
};

/// One wall crossing of an alcove walk.
struct WalkStep {
  FacetSupport facet;
  /// +1 if the form of facet.root_index increased across the wall.
  int direction = 0;
};

Alcove fundamental_alcove(const RootSystemData& rs);

/// Floors of every positive-root form at the barycenter of `vertices`.
IntVector m_vector_of(const RootSystemData& rs, const std::vector<Point>& vertices);

FacetSupport facet_support(const RootSystemData& rs, const Alcove& a, int opposite_type);

/// Reflects the type-`opposite_type` vertex across its opposite wall.
Alcove neighbor(const RootSystemData& rs, const Alcove& a, int opposite_type);

/// True if p lies on some hyperplane (x, alpha) = k.
bool on_wall(const RootSystemData& rs, const Point& p);

/// The alcove containing the generic point p, found by walking from the
/// fundamental alcove along a straight segment. When `trace` is given it
/// receives the walls crossed, in order.
Alcove locate(const RootSystemData& rs, const Point& p, std::vector<WalkStep>* trace = nullptr);

/// A point near p off every wall, whose alcove's closure contains p.
/// Obtained by a small step along rho = (1, ..., 1).
Point generic_nearby(const RootSystemData& rs, const Point& p);

}  // namespace alcoved

#endif  // ALCOVED_ALCOVE_HPP
