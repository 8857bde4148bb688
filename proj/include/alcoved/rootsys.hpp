#ifndef ALCOVED_ROOTSYS_HPP
#define ALCOVED_ROOTSYS_HPP

#include <string>
#include <vector>

#include "alcoved/rational.hpp"

namespace alcoved {

enum class Family { A, B, C, D, E, F, G };

Family parse_family(const std::string& name);
char family_letter(Family f);

/// A positive root, stored by its simple-root coefficients `c` and by the
/// coordinates `d` of its coroot in the fundamental-coweight basis. The form
/// (x, alpha) is c.x and the coroot pairing satisfies c.d == 2.
struct PosRoot {
  IntVector c;
  IntVector d;
  long height = 0;
};

/**
 * Exact data for an irreducible crystallographic root system.
 *
 * Simple roots follow Bourbaki numbering. Positive roots are ordered by
 * height, then by descending coefficient vector, so the simple roots come
 * first in index order and the highest root comes last.
 */
struct RootSystemData {
  Family family = Family::A;
  int rank = 0;
  /// cartan[i][j] = (alpha_i, alpha_j^vee)
  std::vector<IntVector> cartan;
  std::vector<PosRoot> positive_roots;
  size_t theta_index = 0;
  /// Coefficients of the highest root over the simple roots.
  IntVector marks;
  /// Ehrhart denominator exponents: ell[0] = 1, ell[i] = marks[i-1].
  IntVector ell;
  /// 1 + sum of marks.
  long h_dual = 0;

  const PosRoot& theta() const { return positive_roots[theta_index]; }
  /// Index of the simple root alpha_{i+1} in positive_roots (0-based i).
  size_t simple_index(int i) const { return static_cast<size_t>(i); }
  std::string name() const;
};

RootSystemData build_root_system(Family family, int rank);

/// (p, alpha)
Rational eval_form(const PosRoot& root, const Point& p);

/// Affine reflection in the hyperplane (x, alpha) = level.
Point reflect(const Point& p, const PosRoot& root, long level);

/// Converts a point given in the classical Euclidean embedding of the family
/// to fundamental-coweight coordinates (the values of the simple-root forms).
///
///   A_n: R^{n+1}, alpha_i = e_i - e_{i+1}
///   B_n: R^n, alpha_i = e_i - e_{i+1}, alpha_n = e_n
///   C_n: R^n, alpha_i = e_i - e_{i+1}, alpha_n = 2 e_n
///   D_n: R^n, alpha_i = e_i - e_{i+1}, alpha_n = e_{n-1} + e_n
///   G_2: R^3 (sum-zero plane), alpha_1 = (e_1 - 2 e_2 + e_3)/3, alpha_2 = e_2 - e_3
Point to_omega_coords(Family family, int rank, const Point& euclidean);

/// Dimension of the Euclidean embedding used by to_omega_coords.
int euclidean_dimension(Family family, int rank);

}  // namespace alcoved

#endif  // ALCOVED_ROOTSYS_HPP
