#include "alcoved/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace alcoved {

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(long degree, const Integer& coeff) {
  std::vector<Integer> c(degree + 1, Integer(0));
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::coeff(long d) const {
  return d >= 0 && d <= degree() ? coeffs_[d] : Integer(0);
}

Integer Polynomial::eval(const Integer& z) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<Integer> c(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t d = 0; d < coeffs_.size(); ++d) {
    const Integer& c = coeffs_[d];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (d == 0 || mag != 1) out += mag.get_str();
    if (d >= 1) out += var;
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

RationalSeries::RationalSeries(Polynomial num, IntVector exps)
    : numerator(std::move(num)), denom_exponents(std::move(exps)) {
  for (long e : denom_exponents) {
    if (e <= 0) throw DomainError("denominator exponents must be positive");
  }
  std::sort(denom_exponents.begin(), denom_exponents.end());
}

std::vector<Integer> expand(const RationalSeries& s, long T) {
  if (T < 0) throw DomainError("expansion order must be >= 0");
  std::vector<Integer> a(T + 1, Integer(0));
  for (long d = 0; d <= std::min(T, s.numerator.degree()); ++d) a[d] = s.numerator.coeff(d);
  // Division by (1 - z^l) is the running sum a[t] += a[t - l].
  for (long l : s.denom_exponents) {
    for (long t = l; t <= T; ++t) a[t] += a[t - l];
  }
  return a;
}

namespace {

Polynomial one_minus_power(long l) {
  std::vector<Integer> c(l + 1, Integer(0));
  c[0] = 1;
  c[l] = -1;
  return Polynomial(std::move(c));
}

Polynomial product_of(const IntVector& exps) {
  Polynomial p({Integer(1)});
  for (long e : exps) p = p * one_minus_power(e);
  return p;
}

}  // namespace

bool equals(const RationalSeries& a, const RationalSeries& b) {
  // Strip the common part of the two exponent multisets, then cross-multiply.
  IntVector only_a, only_b;
  std::set_difference(a.denom_exponents.begin(), a.denom_exponents.end(),
                      b.denom_exponents.begin(), b.denom_exponents.end(), std::back_inserter(only_a));
  std::set_difference(b.denom_exponents.begin(), b.denom_exponents.end(),
                      a.denom_exponents.begin(), a.denom_exponents.end(), std::back_inserter(only_b));
  return a.numerator * product_of(only_b) == b.numerator * product_of(only_a);
}

Polynomial h_star(const RationalSeries& s) {
  for (long e : s.denom_exponents) {
    if (e != 1) throw DomainError("h* undefined for this denominator; use the numerator directly");
  }
  return s.numerator;
}

std::string render(const RationalSeries& s) {
  std::string num = s.numerator.to_string();
  size_t terms = std::count_if(s.numerator.coeffs().begin(), s.numerator.coeffs().end(),
                               [](const Integer& c) { return c != 0; });
  if (terms > 1) num = "(" + num + ")";
  if (s.denom_exponents.empty()) return num;
  std::map<long, int> mult;
  for (long e : s.denom_exponents) ++mult[e];
  std::string den;
  for (const auto& [e, k] : mult) {
    if (!den.empty()) den += " ";
    den += e == 1 ? "(1 - z)" : "(1 - z^" + std::to_string(e) + ")";
    if (k > 1) den += "^" + std::to_string(k);
  }
  if (mult.size() > 1) den = "(" + den + ")";
  return num + " / " + den;
}

Rational QuasiPolynomial::eval(long t) const {
  long r = ((t % period) + period) % period;
  Rational acc = 0;
  const auto& c = residues[r];
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace {

// Solves the Vandermonde system sum_j c_j x_i^j = y_i exactly.
std::vector<Rational> interpolate(const std::vector<long>& xs, const std::vector<Integer>& ys) {
  const size_t m = xs.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (size_t i = 0; i < m; ++i) {
    Rational p = 1;
    for (size_t j = 0; j < m; ++j) {
      a[i][j] = p;
      p *= xs[i];
    }
    a[i][m] = ys[i];
  }
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    for (size_t i = 0; i < m; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[col][col];
      for (size_t j = col; j <= m; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> c(m);
  for (size_t i = 0; i < m; ++i) c[i] = a[i][m] / a[i][i];
  return c;
}

}  // namespace

QuasiPolynomial quasipolynomial(const RationalSeries& s) {
  if (s.denom_exponents.empty()) throw DomainError("quasipolynomial needs a denominator");
  QuasiPolynomial q;
  q.period = 1;
  for (long e : s.denom_exponents) q.period = std::lcm(q.period, e);
  q.degree = static_cast<long>(s.denom_exponents.size()) - 1;
  long weight = std::accumulate(s.denom_exponents.begin(), s.denom_exponents.end(), 0L);
  // Coefficients agree with the quasipolynomial from t0 on.
  long t0 = std::max(0L, s.numerator.degree() - weight + 1);
  long horizon = t0 + 3 * q.period * (q.degree + 1);
  auto values = expand(s, horizon + q.period);
  q.residues.resize(q.period);
  for (long r = 0; r < q.period; ++r) {
    long first = t0 + ((r - t0) % q.period + q.period) % q.period;
    std::vector<long> xs;
    std::vector<Integer> ys;
    for (long j = 0; j <= q.degree; ++j) {
      xs.push_back(first + j * q.period);
      ys.push_back(values[first + j * q.period]);
    }
    q.residues[r] = interpolate(xs, ys);
  }
  for (long t = t0; t <= horizon; ++t) {
    if (q.eval(t) != Rational(values[t])) {
      throw DomainError("quasipolynomial interpolation does not reproduce t = " + std::to_string(t));
    }
  }
  return q;
}

}  // namespace alcoved
