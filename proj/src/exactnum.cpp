#include "sliceopt/exactnum.hpp"

#include <stdexcept>

namespace sliceopt {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

std::string to_string(const Integer& v) { return v.get_str(10); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

std::string to_string(const Point& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += to_string(x[i]);
  }
  return out + ")";
}

int sign(const Integer& v) { return sgn(v); }
int sign(const Rational& v) { return sgn(v); }

Integer floor(const Rational& v) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& v) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return out;
}

Integer abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }
Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  if (n < 2) return n;
  // invariant: lo^2 <= n < (hi+1)^2
  Integer lo = 1;
  Integer hi;
  mpz_ui_pow_ui(hi.get_mpz_t(), 2, mpz_sizeinbase(n.get_mpz_t(), 2) / 2 + 1);
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    if (mid * mid <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

bool is_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;  // already canonical: powers of coprime numbers stay coprime
}

Surd::Surd(Integer radicand, Integer offset) : p(std::move(radicand)), q(std::move(offset)) {
  if (p < 0) throw std::domain_error("surd with negative radicand");
}

int sqrt_difference_sign(const Integer& a, const Integer& b, const Integer& k) {
  int u = sign(Integer(a - b));  // sign of sqrt(a) - sqrt(b)
  int ks = sign(k);
  if (ks == 0) return u;
  if (u == 0 || u == ks) return ks;
  // Opposite signs: compare |sqrt(a) - sqrt(b)| against |k|.
  // Writing big >= small, |u| vs K is sqrt(big) vs K + sqrt(small).
  const Integer& big = u > 0 ? a : b;
  const Integer& small = u > 0 ? b : a;
  Integer K = abs(k);
  Integer t = big - small - K * K;  // sqrt(big) vs K + sqrt(small) <=> t vs 2K sqrt(small)
  int mag;                          // sign of |u| - K
  if (t < 0) {
    mag = -1;
  } else {
    mag = sign(Integer(t * t - 4 * K * K * small));
  }
  // result sign is u's sign when |u| > K, k's sign when |u| < K
  if (mag == 0) return 0;
  return mag > 0 ? u : ks;
}

int surd_sign(const Surd& a) {
  if (a.q >= 0) return (a.p == 0 && a.q == 0) ? 0 : 1;
  return sign(Integer(a.p - a.q * a.q));
}

static std::strong_ordering to_ordering(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering surd_compare(const Surd& a, const Surd& b) {
  return to_ordering(sqrt_difference_sign(a.p, b.p, a.q - b.q));
}

Rational delta_lower_bound(const Integer& R) {
  if (R < 1) throw std::domain_error("delta_lower_bound requires R >= 1");
  return make_rational(1, 240 * pow(R, 4));
}

Rational surd_value_approx(const Surd& a, const Rational& precision) {
  if (precision <= 0) throw std::domain_error("precision must be positive");
  Integer root = isqrt(a.p);
  if (root * root == a.p) return Rational(root + a.q);
  Integer scale = ceil(Rational(1 / precision));
  Integer scaled_root = isqrt(a.p * scale * scale);
  return make_rational(scaled_root, scale) + Rational(a.q);
}

std::string to_string(const Surd& a) { return "sqrt(" + to_string(a.p) + ")+" + to_string(a.q); }

namespace {

// (sqrt(P) + Q) / D with D > 0
struct Scaled {
  Integer P;
  Integer Q;
  Integer D;
};

Scaled scaled(const Value& v, const Rational& factor) {
  if (const auto* r = std::get_if<Rational>(&v)) {
    Rational x = *r * factor;
    return {0, x.get_num(), x.get_den()};
  }
  const auto& s = std::get<Surd>(v);
  const Integer& fa = factor.get_num();
  return {fa * fa * s.p, fa * s.q, factor.get_den()};
}

}  // namespace

int scaled_difference_sign(const Value& a, const Rational& factor, const Value& b) {
  if (factor <= 0) throw std::domain_error("scale factor must be positive");
  Scaled x = scaled(a, 1);
  Scaled y = scaled(b, factor);
  return sqrt_difference_sign(y.D * y.D * x.P, x.D * x.D * y.P, y.D * x.Q - x.D * y.Q);
}

int value_sign(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return sign(*r);
  return surd_sign(std::get<Surd>(v));
}

std::strong_ordering value_compare(const Value& a, const Value& b) {
  return to_ordering(scaled_difference_sign(a, 1, b));
}

std::optional<Rational> as_rational(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return *r;
  const auto& s = std::get<Surd>(v);
  Integer root = isqrt(s.p);
  if (root * root != s.p) return std::nullopt;
  return Rational(root + s.q);
}

static bool is_integer(const Rational& r) { return r.get_den() == 1; }

Value value_add(const Value& a, const Value& b) {
  auto ra = as_rational(a);
  auto rb = as_rational(b);
  if (ra && rb) return Rational(*ra + *rb);
  if (!ra && rb && is_integer(*rb)) {
    const auto& s = std::get<Surd>(a);
    return Surd(s.p, s.q + rb->get_num());
  }
  if (ra && !rb && is_integer(*ra)) return value_add(b, a);
  if (!ra && !rb) {
    const auto& s = std::get<Surd>(a);
    const auto& t = std::get<Surd>(b);
    if (s.p == t.p) return Surd(4 * s.p, s.q + t.q);
  }
  throw std::domain_error("sum is not representable as sqrt(p) + q");
}

Value value_multiply(const Value& a, const Value& b) {
  auto ra = as_rational(a);
  auto rb = as_rational(b);
  if (ra && rb) return Rational(*ra * *rb);
  if (!ra && rb && is_integer(*rb) && *rb >= 0) {
    const auto& s = std::get<Surd>(a);
    const Integer& k = rb->get_num();
    return Surd(k * k * s.p, k * s.q);
  }
  if (ra && !rb) return value_multiply(b, a);
  throw std::domain_error("product is not representable as sqrt(p) + q");
}

Value value_scale(const Rational& lambda, const Value& a) { return value_multiply(a, lambda); }

Value value_reciprocal(const Value& a) {
  auto r = as_rational(a);
  if (!r) throw std::domain_error("reciprocal of an irrational surd");
  if (*r == 0) throw std::domain_error("reciprocal of zero");
  return Rational(1 / *r);
}

std::string to_string(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  return to_string(std::get<Surd>(v));
}

}  // namespace sliceopt
