#ifndef ALCOVED_JOBSPEC_HPP
#define ALCOVED_JOBSPEC_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "alcoved/polytope.hpp"

namespace alcoved {

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;
  bool operator==(const RootSystemSpec&) const = default;
};

struct BuiltinSpec {
  /// "hypersimplex", "hypercube" or "fundamental"
  std::string name;
  int k = 0;
  int n = 0;
  bool operator==(const BuiltinSpec&) const = default;
};

struct BoundSpec {
  IntVector root;
  long min = 0;
  long max = 0;
  bool operator==(const BoundSpec&) const = default;
};

struct VerticesSpec {
  /// "omega" or "euclidean"
  std::string coords = "omega";
  std::vector<Point> points;
  bool operator==(const VerticesSpec&) const = default;
};

/**
 * A polytope job document (schema 1):
 *
 *   {"schema": 1,
 *    "root_system": {"family": "B", "rank": 2},
 *    "polytope": {"bounds": [{"root": [1, 0], "min": 0, "max": 1}, ...]}
 *              | {"vertices": {"coords": "euclidean", "points": [["1/2", "0"], ...]}}
 *              | {"builtin": {"name": "hypersimplex", "k": 2, "n": 5}},
 *    "T": 8, "seed": ["1/3", "1/5"], "dot": "graph.dot"}
 *
 * Rationals are strings "p/q". root_system may be omitted for the
 * hypersimplex and hypercube builtins.
 */
struct JobSpec {
  int schema = 1;
  std::optional<RootSystemSpec> root_system;
  std::variant<BuiltinSpec, std::vector<BoundSpec>, VerticesSpec> polytope;
  std::optional<long> T;
  std::optional<Point> seed;
  std::optional<std::string> dot;

  bool operator==(const JobSpec&) const = default;
};

/// Throws InputError naming the line or field at fault.
JobSpec parse_job_spec(const std::string& text);
nlohmann::json to_json(const JobSpec& spec);

AlcovedPolytope build_polytope(const JobSpec& spec);

/// "1/3,1/5" -> point
Point parse_point(const std::string& text);

}  // namespace alcoved

#endif  // ALCOVED_JOBSPEC_HPP
