#include <doctest.h>

#include <random>

#include "sliceopt/sliceable.hpp"
#include "support/reference.hpp"

using namespace sliceopt;

namespace {
Integer I(long v) { return Integer(v); }
Rational Q(long n, long d) { return make_rational(Integer(n), Integer(d)); }
std::vector<Integer> V(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.push_back(Integer(x));
  return out;
}
AffineForm F(std::initializer_list<long> c, long off = 0) { return AffineForm{V(c), I(off)}; }
Point P(std::initializer_list<long> v) { return V(v); }

bool same(const Value& a, const Value& b) { return value_compare(a, b) == 0; }

const std::vector<Rational>& epsilons() {
  static const std::vector<Rational> e{Q(1, 1), Q(1, 2), Q(1, 4)};
  return e;
}
}  // namespace

TEST_CASE("atoms") {
  SliceableSpec sq = form_power(F({1}), 2);
  CHECK(same(sq.evaluate(P({-3})), Rational(9)));
  CHECK(sq.forms.size() == 1);
  // least zeta with (1 + 1/zeta)^e <= 2
  CHECK(form_power(F({1}), 1).zeta == 1);
  CHECK(sq.zeta == 3);
  CHECK(form_power(F({1}), 4).zeta == 6);
  for (unsigned e = 1; e <= 8; ++e) {
    std::uint64_t z = form_power(F({1}), e).zeta;
    CHECK(pow(Rational(1 + Q(1, static_cast<long>(z))), e) <= 2);
    if (z > 1) CHECK(pow(Rational(1 + Q(1, static_cast<long>(z - 1))), e) > 2);
  }
  SliceableSpec mono = form_monomial({{F({1, 0}), 2}, {F({0, 1}, 1), 2}});
  CHECK(same(mono.evaluate(P({2, -3})), Rational(16)));
  CHECK(mono.zeta == 6);
  CHECK(same(constant_spec(Q(3, 2)).evaluate(P({5})), Q(3, 2)));
  CHECK_THROWS_AS(constant_spec(Q(-1, 1)), std::domain_error);
}

TEST_CASE("scale examples") {
  SliceableSpec sq = form_power(F({1}), 2);
  CHECK(same(scale(Rational(0), sq).evaluate(P({7})), Rational(0)));
  CHECK(same(scale(Rational(1), sq).evaluate(P({7})), Rational(49)));
  SliceableSpec three = scale(Rational(3), sq);
  CHECK(same(three.evaluate(P({2})), Rational(12)));
  CHECK(three.zeta == sq.zeta);
  CHECK(three.forms == sq.forms);
  CHECK_THROWS_AS(scale(Rational(-1), sq), std::domain_error);
}

TEST_CASE("add examples") {
  SliceableSpec sx = form_power(F({1, 0}), 2), sy = form_power(F({0, 1}), 2);
  SliceableSpec zero = constant_spec(Rational(0));
  CHECK(same(add(sx, zero).evaluate(P({3, 1})), Rational(9)));
  SliceableSpec sum = add(sx, sy);
  CHECK(sum.forms == std::vector<AffineForm>{F({1, 0}), F({0, 1})});
  CHECK(same(sum.evaluate(P({3, -2})), Rational(13)));
  SliceableSpec z2 = sx, z5 = sy;
  z2.zeta = 2;
  z5.zeta = 5;
  CHECK(add(z2, z5).zeta == 5);
}

TEST_CASE("multiply examples") {
  SliceableSpec sx = form_power(F({1}), 2);
  SliceableSpec one = constant_spec(Rational(1));
  SliceableSpec prod = multiply(sx, one);
  CHECK(same(prod.evaluate(P({-4})), Rational(16)));
  CHECK(prod.zeta == 4 * sx.zeta);
  SliceableSpec a = form_power(F({1}), 1), b = form_power(F({1}), 1);
  CHECK(multiply(a, b).zeta == 4);
  CHECK(same(multiply(sx, sx).evaluate(P({3})), Rational(81)));
  // zeta 3 -> 12 -> 48 -> 192, past the default cap of 64
  SliceableSpec x4 = multiply(sx, sx), x6 = multiply(x4, sx);
  CHECK(x6.zeta == 48);
  CHECK_THROWS_AS(multiply(x6, sx), std::domain_error);
  CHECK(multiply(x6, sx, 1000).zeta == 192);
}

TEST_CASE("reciprocal examples") {
  SliceableSpec sq1 = add(form_power(F({1}), 2), constant_spec(Rational(1)));
  SliceableSpec inv = reciprocal(sq1);
  CHECK(same(inv.evaluate(P({2})), Q(1, 5)));
  CHECK(inv.zeta == sq1.zeta);
  CHECK(same(reciprocal(constant_spec(Rational(2))).evaluate(P({0})), Q(1, 2)));
  CHECK_THROWS_AS(reciprocal(form_power(F({1}), 2)).evaluate(P({0})), std::domain_error);
}

TEST_CASE("check_sliceable examples") {
  Polytope line = Polytope::cube(1, I(20));
  SliceCheck sq = check_sliceable(form_power(F({1}), 2), line, Rational(1));
  CHECK(sq.outcome == SliceCheck::Outcome::pass);
  CHECK(sq.pairs_checked > 0);

  SliceableSpec linear{{F({1})}, 1, [](const Point& x) -> Value { return Rational(x[0]); }};
  SliceCheck neg = check_sliceable(linear, Polytope::cube(1, I(5)), Rational(1));
  CHECK(neg.outcome == SliceCheck::Outcome::rejected);

  SliceableSpec mixed = add(form_power(F({1, 1}), 2), form_power(F({0, 1}), 4));
  CHECK(mixed.zeta == 6);
  for (const auto& eps : epsilons())
    CHECK(check_sliceable(mixed, Polytope::cube(2, I(20)), eps).outcome == SliceCheck::Outcome::pass);
}

TEST_CASE("zeta 1 is too small for a square") {
  // With zeta = 1 and eps = 1 the band [2, 4] holds 2 and 4, and 16 > 2 * 4.
  SliceableSpec sq = form_power(F({1}), 2);
  sq.zeta = 1;
  SliceCheck r = check_sliceable(sq, Polytope::cube(1, I(20)), Rational(1));
  REQUIRE(r.outcome == SliceCheck::Outcome::fail);
  REQUIRE(r.witness.has_value());
  const auto& [x, y] = *r.witness;
  CHECK(value_compare(sq.evaluate(x), value_scale(Rational(2), sq.evaluate(y))) > 0);
}

TEST_CASE("sampled checking finds the same failure") {
  SliceableSpec sq = form_power(F({1}), 2);
  sq.zeta = 1;
  CHECK(check_sliceable(sq, Polytope::cube(1, I(20)), Rational(1), 5000, 3).outcome == SliceCheck::Outcome::fail);
  SliceableSpec good = form_power(F({1}), 2);
  CHECK(check_sliceable(good, Polytope::cube(1, I(20)), Rational(1), 5000, 3).outcome == SliceCheck::Outcome::pass);
}

TEST_CASE("closure constructions pass exhaustive checks") {
  const AffineForm x = F({1, 0}), y = F({0, 1}, 0), xy = F({1, -1}, 2);
  const SliceableSpec one = constant_spec(Rational(1));
  std::vector<std::pair<std::string, SliceableSpec>> specs{
      {"x^2 + y^2", add(form_power(x, 2), form_power(y, 2))},
      {"3 (x-y+2)^4", scale(Rational(3), form_power(xy, 4))},
      {"x^2 y^2", multiply(form_power(x, 2), form_power(y, 2))},
      {"1/(x^2 + y^2 + 1)", reciprocal(add(add(form_power(x, 2), form_power(y, 2)), one))},
      {"x^2 / (y^2 + 1)", multiply(form_power(x, 2), reciprocal(add(form_power(y, 2), one)))},
  };
  for (const auto& [name, s] : specs)
    for (const auto& eps : epsilons()) {
      CAPTURE(name);
      CAPTURE(to_string(eps));
      SliceCheck r = check_sliceable(s, Polytope::cube(2, I(20)), eps);
      CHECK(r.outcome == SliceCheck::Outcome::pass);
    }
}

TEST_CASE("algebraic laws at the evaluator level") {
  const SliceableSpec a = form_power(F({1, 2}, -1), 2), b = form_power(F({0, 1}, 3), 2),
                      c = add(form_power(F({1, 0}), 2), constant_spec(Rational(1)));
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int t = 0; t < 200; ++t) {
    Point x = P({d(rng), d(rng)});
    CHECK(same(add(a, b).evaluate(x), add(b, a).evaluate(x)));
    CHECK(same(add(add(a, b), c).evaluate(x), add(a, add(b, c)).evaluate(x)));
    CHECK(same(multiply(a, b).evaluate(x), multiply(b, a).evaluate(x)));
    CHECK(same(multiply(multiply(a, b), c, 1000).evaluate(x), multiply(a, multiply(b, c), 1000).evaluate(x)));
    CHECK(same(multiply(multiply(a, c), reciprocal(c)).evaluate(x), a.evaluate(x)));
  }
}
