#ifndef ALCOVED_RATIONAL_HPP
#define ALCOVED_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alcoved {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of V in fundamental-coweight coordinates. The coweight lattice is
/// exactly the set of integer vectors.
using Point = std::vector<Rational>;
using IntVector = std::vector<long>;

/// Raised for violated preconditions and malformed domain objects.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed user input (specs, command-line values).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational dot(const IntVector& c, const Point& x);
long dot(const IntVector& c, const IntVector& x);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
bool is_integer(const Rational& q);

/// Parses "p/q" or "p"; throws InputError on anything else.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Point& p);

}  // namespace alcoved

#endif  // ALCOVED_RATIONAL_HPP
