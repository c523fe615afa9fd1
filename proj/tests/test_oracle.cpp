#include <doctest.h>

#include "sliceopt/motzkin.hpp"
#include "sliceopt/oracle.hpp"
#include "sliceopt/quadform.hpp"

using namespace sliceopt;

namespace {
Integer I(long v) { return Integer(v); }
Rational Q(long n, long d) { return make_rational(Integer(n), Integer(d)); }
std::vector<Integer> V(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.push_back(Integer(x));
  return out;
}

SolveReport solved(Point x, long value) {
  SolveReport r;
  r.status = SolveStatus::solved;
  r.x = std::move(x);
  r.value = Rational(value);
  return r;
}
}  // namespace

TEST_CASE("brute_force_min examples") {
  SymMatrix q(IntMatrix{{I(1), I(0)}, {I(0), I(-1)}});
  auto saddle = brute_force_min(Polytope::cube(2, I(3)), [&](const Point& x) -> Value { return Rational(eval_f(q, x)); });
  REQUIRE(saddle.has_value());
  CHECK(saddle->x == V({0, -3}));
  CHECK(value_compare(saddle->value, Value(Rational(-9))) == 0);

  auto motzkin =
      brute_force_min(Polytope::cube(2, I(2)), [](const Point& x) -> Value { return Rational(motzkin_value(x)); });
  REQUIRE(motzkin.has_value());
  CHECK(motzkin->x == V({-1, -1}));
  CHECK(value_sign(motzkin->value) == 0);

  IntMatrix a(2, 1);
  a(0, 0) = 3;
  a(1, 0) = -3;
  CHECK_FALSE(brute_force_min(Polytope(a, V({1, -1})), [](const Point&) -> Value { return Rational(0); }).has_value());

  EnumerationOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(brute_force_min(Polytope::cube(2, I(3)), [](const Point&) -> Value { return Rational(0); }, tiny),
                  BudgetExceeded);
}

TEST_CASE("verify_value examples") {
  Verdict neg = verify_value(Value(Rational(-8)), Value(Rational(-9)), Q(1, 4));
  CHECK(neg.pass);
  CHECK(neg.tag == OptimumSign::negative);
  CHECK(*neg.slack == Q(4, 5));

  Verdict zero = verify_value(Value(Rational(1)), Value(Rational(0)), Q(1, 4));
  CHECK_FALSE(zero.pass);
  CHECK(zero.tag == OptimumSign::zero);

  Verdict boundary = verify_value(Value(Rational(5)), Value(Rational(4)), Q(1, 4));
  CHECK(boundary.pass);
  CHECK(boundary.tag == OptimumSign::positive);
  CHECK(*boundary.slack == 0);

  CHECK_FALSE(verify_value(Value(Rational(6)), Value(Rational(4)), Q(1, 4)).pass);
  CHECK_FALSE(verify_value(Value(Rational(-7)), Value(Rational(-9)), Q(1, 4)).pass);
  CHECK(verify_value(Value(Surd(I(2), I(0))), Value(Rational(1)), Q(1, 2)).pass);
  CHECK_FALSE(verify_value(Value(Surd(I(3), I(0))), Value(Rational(1)), Q(1, 2)).pass);
}

TEST_CASE("verify_epsilon checks feasibility and the reported value") {
  Polytope p = Polytope::cube(2, I(3));
  Evaluator f = [](const Point& x) -> Value { return Rational(x[0] * x[0] - x[1] * x[1]); };
  Optimum opt{V({0, -3}), Rational(-9)};
  CHECK(verify_epsilon(solved(V({1, 3}), -8), p, f, opt, Q(1, 4)).pass);
  CHECK_FALSE(verify_epsilon(solved(V({0, 4}), -16), p, f, opt, Q(1, 4)).pass);
  CHECK_FALSE(verify_epsilon(solved(V({1, 3}), -9), p, f, opt, Q(1, 4)).pass);
  SolveReport infeasible;
  CHECK_FALSE(verify_epsilon(infeasible, p, f, opt, Q(1, 4)).pass);
}

TEST_CASE("the optimum always verifies and verdicts are monotone in epsilon") {
  const std::vector<Rational> eps{Q(1, 100), Q(1, 20), Q(1, 4), Q(1, 2), Q(1, 1), Q(3, 1)};
  for (long opt : {-9L, -1L, 0L, 1L, 12L}) {
    for (std::size_t i = 0; i < eps.size(); ++i) CHECK(verify_value(Value(Rational(opt)), Value(Rational(opt)), eps[i]).pass);
    for (long rep = opt; rep <= opt + 12; ++rep) {
      bool passed = false;
      for (const auto& e : eps) {
        bool now = verify_value(Value(Rational(rep)), Value(Rational(opt)), e).pass;
        if (passed) CHECK(now);
        passed = passed || now;
      }
    }
  }
}
