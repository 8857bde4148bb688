#ifndef ALCOVED_SERIES_HPP
#define ALCOVED_SERIES_HPP

#include <string>
#include <vector>

#include "alcoved/rational.hpp"

namespace alcoved {

/// Dense univariate polynomial with integer coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  static Polynomial monomial(long degree, const Integer& coeff = 1);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(long d) const;
  Integer eval(const Integer& z) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  /// "1 + 4z + z^2"
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// numerator / prod_i (1 - z^{denom_exponents[i]}). Exponents are kept sorted.
struct RationalSeries {
  Polynomial numerator;
  IntVector denom_exponents;

  RationalSeries() = default;
  RationalSeries(Polynomial num, IntVector exps);
};

/// Coefficients of z^0 .. z^T.
std::vector<Integer> expand(const RationalSeries& s, long T);

bool equals(const RationalSeries& a, const RationalSeries& b);

/// The numerator, when every denominator exponent is 1.
Polynomial h_star(const RationalSeries& s);

/// "(1 + z + z^2) / ((1 - z)^2 (1 - z^2))"
std::string render(const RationalSeries& s);

/// A quasipolynomial t -> sum_j residues[t mod period][j] t^j.
struct QuasiPolynomial {
  long period = 1;
  long degree = 0;
  std::vector<std::vector<Rational>> residues;

  Rational eval(long t) const;
};

/// Interpolates the coefficient sequence of s per residue class modulo the
/// lcm of the denominator exponents. Throws if the interpolant fails to
/// reproduce expand() up to 3 * period * (degree + 1).
QuasiPolynomial quasipolynomial(const RationalSeries& s);

}  // namespace alcoved

#endif  // ALCOVED_SERIES_HPP
