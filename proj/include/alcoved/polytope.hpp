#ifndef ALCOVED_POLYTOPE_HPP
#define ALCOVED_POLYTOPE_HPP

#include <optional>
#include <vector>

#include "alcoved/alcove.hpp"
#include "alcoved/rootsys.hpp"

namespace alcoved {

struct Bound {
  long lo = 0;
  long hi = 0;
  bool operator==(const Bound&) const = default;
};

/**
 * P = { x : lo_alpha <= (x, alpha) <= hi_alpha } over the positive roots.
 * Roots without a bound are unconstrained. `vertices` is kept when the
 * polytope was built from a vertex list and is used to pick a default seed.
 */
struct AlcovedPolytope {
  RootSystemData rs;
  std::vector<std::optional<Bound>> bounds;
  std::vector<Point> vertices;
};

AlcovedPolytope from_bounds(const RootSystemData& rs, std::vector<std::optional<Bound>> bounds);

/// Bounds given by root coefficient vectors instead of root indices.
struct RootBound {
  IntVector c;
  Bound bound;
};
AlcovedPolytope from_bounds(const RootSystemData& rs, const std::vector<RootBound>& bounds);

/// Tight integer bounds floor(min) / ceil(max) of every form over the vertices.
AlcovedPolytope from_vertices(const RootSystemData& rs, const std::vector<Point>& vertices);

/// Delta_{k,n} in type A_{n-1}; omega-coordinates are x_1..x_{n-1}.
AlcovedPolytope hypersimplex(int k, int n);
/// [0,1]^n in type A_n, with omega-coordinates the successive differences.
AlcovedPolytope hypercube(int n);
/// The closed fundamental alcove.
AlcovedPolytope fundamental_polytope(const RootSystemData& rs);

bool contains_alcove(const AlcovedPolytope& p, const IntVector& m);

/// Index of the positive root with coefficient vector c.
size_t root_index(const RootSystemData& rs, const IntVector& c);

/// Some alcove of P. Uses the vertex average when vertices are known,
/// otherwise searches outward from the centre of the simple-root box.
Alcove default_seed_alcove(const AlcovedPolytope& p, size_t cap = 1000000);

}  // namespace alcoved

#endif  // ALCOVED_POLYTOPE_HPP
