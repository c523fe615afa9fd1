#pragma once

// Exact integer/rational arithmetic and quadratic surds sqrt(p) + q.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sliceopt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer lattice point.
using Point = std::vector<Integer>;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (decimal integers). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
std::string to_string(const Point& x);

int sign(const Integer& v);
int sign(const Rational& v);

Integer floor(const Rational& v);
Integer ceil(const Rational& v);
Integer abs(const Integer& v);
Rational abs(const Rational& v);

/// floor(sqrt(n)) by integer bisection. n >= 0.
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

/// The real number sqrt(p) + q with integers p >= 0 and q.
struct Surd {
  Integer p;
  Integer q;

  Surd() = default;
  Surd(Integer radicand, Integer offset);

  bool operator==(const Surd& other) const = default;
};

/// sign(sqrt(a) - sqrt(b) + k), decided exactly by at most two squarings.
int sqrt_difference_sign(const Integer& a, const Integer& b, const Integer& k);

int surd_sign(const Surd& a);
std::strong_ordering surd_compare(const Surd& a, const Surd& b);

/// 1 / (240 R^4): separation of distinct surd values with |p|, |q| <= R.
Rational delta_lower_bound(const Integer& R);

/// Rational r with |r - (sqrt(p) + q)| <= precision.
Rational surd_value_approx(const Surd& a, const Rational& precision);

std::string to_string(const Surd& a);

/// Value of a function that is either rational or a quadratic surd.
using Value = std::variant<Rational, Surd>;

int value_sign(const Value& v);
std::strong_ordering value_compare(const Value& a, const Value& b);

/// Sign of a - factor * b for factor > 0, exact.
int scaled_difference_sign(const Value& a, const Rational& factor, const Value& b);

/// Converts to Rational when the radical part is a perfect square.
std::optional<Rational> as_rational(const Value& v);

Value value_add(const Value& a, const Value& b);
Value value_multiply(const Value& a, const Value& b);
Value value_scale(const Rational& lambda, const Value& a);
Value value_reciprocal(const Value& a);

std::string to_string(const Value& v);

}  // namespace sliceopt
