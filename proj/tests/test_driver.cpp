#include <doctest.h>

#include "sliceopt/driver.hpp"
#include "sliceopt/quadform.hpp"
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

// g(x) = x_1, minimized exactly over the cell's points.
BasicSolver linear_solver() {
  BasicSolver s;
  s.terms = 1;
  s.evaluate = [](std::size_t, const Point& x) -> Value { return Rational(x[0]); };
  s.minimize = [](const CellView& cell, const std::vector<Value>&, const Rational&) -> std::optional<Point> {
    std::optional<Point> best;
    for (const auto& x : cell.members)
      if (!best || x[0] < (*best)[0]) best = x;
    return best;
  };
  return s;
}

Evaluator first_coordinate() {
  return [](const Point& x) -> Value { return Rational(x[0]); };
}
}  // namespace

TEST_CASE("clamp_epsilon") {
  std::vector<std::string> notes;
  CHECK(clamp_epsilon(Q(1, 4), &notes) == Q(1, 4));
  CHECK(notes.empty());
  CHECK(clamp_epsilon(Q(1, 1), &notes) == Q(1023, 1024));
  CHECK(clamp_epsilon(Q(7, 2), &notes) == Q(1023, 1024));
  CHECK(notes.size() == 2);
  CHECK_THROWS_AS(clamp_epsilon(Q(0, 1)), std::domain_error);
}

TEST_CASE("linear objective with a constant sliceable part is solved exactly") {
  SolveReport r = approx_minimize(Polytope::cube(2, I(3)), linear_solver(), {constant_spec(Rational(1))},
                                  first_coordinate(), Q(1, 2));
  REQUIRE(r.status == SolveStatus::solved);
  CHECK(value_compare(r.value, Value(Rational(-3))) == 0);
  CHECK(r.x == V({-3, -3}));
  CHECK(r.epsilon == Q(1, 2));
}

TEST_CASE("product form on the saddle diag(1,-1)") {
  SymMatrix q(IntMatrix{{I(1), I(0)}, {I(0), I(-1)}});
  Polytope p = Polytope::cube(2, I(3));
  SolveReport r = fptas_quadform(q, p, Q(1, 4));
  REQUIRE(r.status == SolveStatus::solved);
  auto v = *as_rational(r.value);
  CHECK(v >= -9);
  CHECK(v <= Q(-36, 5));
  CHECK(r.cells <= 49);
  CHECK(r.subproblems <= r.cells);
}

TEST_CASE("no integer points gives an infeasible report") {
  IntMatrix a(4, 2);
  a(0, 0) = 2, a(1, 0) = -2, a(2, 1) = 1, a(3, 1) = -1;
  Polytope p(a, V({1, -1, 1, 1}));  // x = 1/2
  SolveReport r = approx_minimize(p, linear_solver(), {constant_spec(Rational(1))}, first_coordinate(), Q(1, 2));
  CHECK(r.status == SolveStatus::infeasible);
  CHECK(r.cells == 0);
}

TEST_CASE("single-point polytope") {
  Polytope p = Polytope::box(V({2, -1}), V({2, -1}));
  SolveReport r = approx_minimize_product(p, linear_solver(), constant_spec(Rational(1)), first_coordinate(), Q(1, 3));
  REQUIRE(r.status == SolveStatus::solved);
  CHECK(r.x == V({2, -1}));
  CHECK(r.cells == 1);
}

TEST_CASE("convex quadratic with constant sliceable part is exact") {
  // g(x) = (x1 - 2)^2 + (x2 + 1)^2, s = 1
  BasicSolver s;
  s.terms = 1;
  auto g = [](const Point& x) { return Integer((x[0] - 2) * (x[0] - 2) + (x[1] + 1) * (x[1] + 1)); };
  s.evaluate = [g](std::size_t, const Point& x) -> Value { return Rational(g(x)); };
  s.minimize = [g](const CellView& cell, const std::vector<Value>&, const Rational&) -> std::optional<Point> {
    auto best = reference::min_over({cell.members.begin(), cell.members.end()}, g);
    if (!best) return std::nullopt;
    return best->first;
  };
  SolveReport r = approx_minimize_product(Polytope::cube(2, I(4)), s, constant_spec(Rational(1)),
                                          [g](const Point& x) -> Value { return Rational(g(x)); }, Q(1, 4));
  REQUIRE(r.status == SolveStatus::solved);
  CHECK(r.x == V({2, -1}));
  CHECK(value_sign(r.value) == 0);
}

TEST_CASE("frozen weights are s(rep) / (1 + eps/4)") {
  // g_1 = 1 so the cell objective is just the weight; record the weights seen.
  std::vector<Value> seen;
  BasicSolver s;
  s.terms = 1;
  s.evaluate = [](std::size_t, const Point&) -> Value { return Rational(1); };
  s.minimize = [&seen](const CellView& cell, const std::vector<Value>& w, const Rational& eps) -> std::optional<Point> {
    CHECK(eps == Q(1, 8));
    seen.push_back(w[0]);
    return cell.members.front();
  };
  SliceableSpec sq = form_power(AffineForm{V({1}), I(0)}, 2);
  approx_minimize(Polytope::box(V({1}), V({1})), s, {sq}, [](const Point&) -> Value { return Rational(1); }, Q(1, 2));
  REQUIRE(seen.size() == 1);
  CHECK(value_compare(seen[0], Value(Q(8, 9))) == 0);
}

TEST_CASE("reports are deterministic and cell counts bounded by the point count") {
  SymMatrix q(IntMatrix{{I(2), I(3), I(0)}, {I(3), I(1), I(1)}, {I(0), I(1), I(-4)}});
  Polytope p = Polytope::cube(3, I(3));
  for (CoverStrategy strategy : {CoverStrategy::points, CoverStrategy::cells}) {
    DriverOptions opts;
    opts.cover.strategy = strategy;
    SolveReport a = fptas_quadform(q, p, Q(1, 4), opts);
    SolveReport b = fptas_quadform(q, p, Q(1, 4), opts);
    CHECK(a.x == b.x);
    CHECK(value_compare(a.value, b.value) == 0);
    CHECK(a.cells == b.cells);
    if (strategy == CoverStrategy::points) CHECK(a.cells <= 343);
  }
}
