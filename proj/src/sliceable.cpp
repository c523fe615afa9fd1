#include "sliceopt/sliceable.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace sliceopt {

SliceParams SliceableSpec::params(const Rational& eps) const {
  return SliceParams{forms, Rational(1 + eps / Rational(Integer(std::to_string(zeta))))};
}

SliceableSpec constant_spec(const Rational& c) {
  if (c < 0) throw std::domain_error("constant spec must be nonnegative");
  return SliceableSpec{{}, 1, [c](const Point&) -> Value { return c; }};
}

static std::uint64_t zeta_for_degree(unsigned degree) {
  if (degree <= 1) return 1;
  std::uint64_t zeta = 1;
  while (pow(Rational(1 + make_rational(1, Integer(std::to_string(zeta)))), degree) > 2) ++zeta;
  return zeta;
}

SliceableSpec form_monomial(const std::vector<std::pair<AffineForm, unsigned>>& factors) {
  unsigned degree = 0;
  std::vector<AffineForm> forms;
  for (const auto& [f, e] : factors) {
    degree += e;
    forms.push_back(f);
  }
  auto eval = [factors](const Point& x) -> Value {
    Integer v = 1;
    for (const auto& [f, e] : factors) v *= pow(abs(f(x)), e);
    return Rational(v);
  };
  return SliceableSpec{std::move(forms), zeta_for_degree(degree), std::move(eval)};
}

SliceableSpec form_power(const AffineForm& form, unsigned exponent) { return form_monomial({{form, exponent}}); }

SliceableSpec scale(const Rational& lambda, const SliceableSpec& s) {
  if (lambda < 0) throw std::domain_error("scale factor must be nonnegative");
  auto inner = s.evaluate;
  return SliceableSpec{s.forms, s.zeta, [lambda, inner](const Point& x) { return value_scale(lambda, inner(x)); }};
}

static std::vector<AffineForm> concat(const std::vector<AffineForm>& a, const std::vector<AffineForm>& b) {
  std::vector<AffineForm> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

static void check_zeta(std::uint64_t zeta, std::uint64_t cap) {
  if (zeta > cap)
    throw std::domain_error("zeta " + std::to_string(zeta) + " exceeds cap " + std::to_string(cap));
}

SliceableSpec add(const SliceableSpec& s, const SliceableSpec& r, std::uint64_t zeta_cap) {
  std::uint64_t zeta = std::max(s.zeta, r.zeta);
  check_zeta(zeta, zeta_cap);
  auto a = s.evaluate, b = r.evaluate;
  return SliceableSpec{concat(s.forms, r.forms), zeta, [a, b](const Point& x) { return value_add(a(x), b(x)); }};
}

SliceableSpec multiply(const SliceableSpec& s, const SliceableSpec& r, std::uint64_t zeta_cap) {
  std::uint64_t zeta = 4 * std::max(s.zeta, r.zeta);
  check_zeta(zeta, zeta_cap);
  auto a = s.evaluate, b = r.evaluate;
  return SliceableSpec{concat(s.forms, r.forms), zeta,
                       [a, b](const Point& x) { return value_multiply(a(x), b(x)); }};
}

SliceableSpec reciprocal(const SliceableSpec& s) {
  auto a = s.evaluate;
  return SliceableSpec{s.forms, s.zeta, [a](const Point& x) { return value_reciprocal(a(x)); }};
}

SliceCheck check_sliceable(const SliceableSpec& s, const Polytope& p, const Rational& eps, std::uint64_t trials,
                           std::uint64_t seed, const EnumerationOptions& opts) {
  if (eps <= 0) throw std::domain_error("eps must be positive");
  SliceCheck out;
  SliceParams params = s.params(eps);

  std::vector<Point> points = enumerate_integer_points(Region{p, {}, std::nullopt}, opts);
  std::map<Point, Value> values;
  for (const auto& x : points) {
    Value v;
    try {
      v = s.evaluate(x);
    } catch (const std::domain_error& e) {
      out.outcome = SliceCheck::Outcome::rejected;
      out.witness = {x, x};
      out.reason = std::string("evaluation failed: ") + e.what();
      return out;
    }
    if (value_sign(v) < 0) {
      out.outcome = SliceCheck::Outcome::rejected;
      out.witness = {x, x};
      out.reason = "negative value " + to_string(v) + " at " + to_string(x);
      return out;
    }
    values.emplace(x, std::move(v));
  }

  std::vector<AffineForm> all_forms = params.forms;
  Integer radius = bounding_radius(p, all_forms);
  CoverOptions copts;
  copts.enumeration = opts;
  auto cells = cover(p, params, level_cap(radius, params.ratio), copts);

  const Rational factor = 1 + eps;
  auto violates = [&](const Point& x, const Point& y) {
    ++out.pairs_checked;
    return scaled_difference_sign(values.at(x), factor, values.at(y)) > 0;
  };
  auto fail = [&](const Point& x, const Point& y) {
    out.outcome = SliceCheck::Outcome::fail;
    out.witness = {x, y};
    out.reason = "s" + to_string(x) + " = " + to_string(values.at(x)) + " exceeds (1+eps) * s" + to_string(y) +
                 " = " + to_string(values.at(y));
  };

  if (trials == 0) {
    for (const auto& cell : cells)
      for (const auto& x : cell.members)
        for (const auto& y : cell.members)
          if (x != y && violates(x, y)) {
            fail(x, y);
            return out;
          }
    return out;
  }

  std::vector<const Cell*> multi;
  for (const auto& c : cells)
    if (c.members.size() > 1) multi.push_back(&c);
  if (multi.empty()) return out;
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Cell& c = *multi[rng() % multi.size()];
    const Point& x = c.members[rng() % c.members.size()];
    const Point& y = c.members[rng() % c.members.size()];
    if (x != y && violates(x, y)) {
      fail(x, y);
      return out;
    }
  }
  return out;
}

}  // namespace sliceopt
