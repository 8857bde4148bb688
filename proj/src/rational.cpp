#include "alcoved/rational.hpp"

#include <cctype>

namespace alcoved {

Rational dot(const IntVector& c, const Point& x) {
  if (c.size() != x.size()) throw DomainError("dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) s += c[i] * x[i];
  }
  return s;
}

long dot(const IntVector& c, const IntVector& x) {
  if (c.size() != x.size()) throw DomainError("dimension mismatch");
  long s = 0;
  for (size_t i = 0; i < c.size(); ++i) s += c[i] * x[i];
  return s;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  auto strip = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
  Integer n(strip(num)), d(strip(den));
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Point& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p[i].get_str();
  }
  return out + ")";
}

}  // namespace alcoved
