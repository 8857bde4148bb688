#ifndef ALCOVED_ORACLE_HPP
#define ALCOVED_ORACLE_HPP

#include <optional>
#include <set>
#include <vector>

#include "alcoved/polytope.hpp"
#include "alcoved/shelling.hpp"

namespace alcoved {

/// Number of integer points of t * P, by enumeration of the simple-root box.
Integer count_points(const AlcovedPolytope& p, long t);

/// Integer points of t times the closed fundamental alcove, minus the points
/// on the walls opposite the vertex types in `removed_types`.
Integer count_half_open_fundamental(const RootSystemData& rs, const std::set<int>& removed_types, long t);

struct CountRow {
  long t = 0;
  Integer oracle;
  Integer series;
  bool match = false;
};

struct CountReport {
  std::vector<CountRow> rows;
  bool all_match() const;
};

/// Compares the shelling series expansion against count_points for t = 0..T.
CountReport verify(const AlcovedPolytope& p, const std::optional<Point>& seed, long T);
CountReport verify(const AlcovedPolytope& p, const RationalSeries& series, long T);

struct PartitionResult {
  bool ok = true;
  /// Lattice points of t * P examined.
  long points = 0;
  /// First offending point and the number of half-open alcoves holding it.
  IntVector bad_point;
  long bad_count = 0;
};

/// Checks that every integer point of t * P lies in exactly one half-open
/// alcove of the decomposition given by g's BFS covers.
PartitionResult partition_check(const AlcovedPolytope& p, const DualGraph& g, long t);

}  // namespace alcoved

#endif  // ALCOVED_ORACLE_HPP
