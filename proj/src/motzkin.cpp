#include "sliceopt/motzkin.hpp"

#include <stdexcept>

namespace sliceopt {

namespace {

AffineForm form(long a, long b, long c) { return AffineForm{{Integer(a), Integer(b)}, Integer(c)}; }

bool off_axes(const Point& x) { return x[0] != 0 && x[1] != 0; }

}  // namespace

Integer motzkin_value(const Point& x) {
  const Integer x2 = x[0] * x[0], y2 = x[1] * x[1];
  return x2 * x2 * y2 + x2 * y2 * y2 - 3 * x2 * y2 + 1;
}

std::vector<SliceableSpec> motzkin_sliceable_parts() {
  const AffineForm fx = form(1, 0, 0), fy = form(0, 1, 0);
  const AffineForm one_minus_x = form(-1, 0, 1), one_plus_x = form(1, 0, 1);
  const AffineForm one_minus_y = form(0, -1, 1), one_plus_y = form(0, 1, 1);
  const SliceableSpec inverse_norm = reciprocal(add(form_power(fx, 2), form_power(fy, 2)));
  return {
      multiply(form_monomial({{fy, 2}, {one_minus_x, 2}, {one_plus_x, 2}}), inverse_norm),
      multiply(form_monomial({{fx, 2}, {one_minus_y, 2}, {one_plus_y, 2}}), inverse_norm),
      multiply(form_monomial({{fx, 2}, {fy, 2}}), inverse_norm),
  };
}

SolveReport motzkin_solve(const Polytope& p, const Rational& eps, const DriverOptions& opts) {
  if (p.dim() != 2) throw std::invalid_argument("the Motzkin polynomial is bivariate");

  BasicSolver solver;
  solver.terms = 3;
  solver.evaluate = [](std::size_t j, const Point& x) -> Value {
    if (j < 2) return Rational(1);
    Integer t = x[0] * x[0] + x[1] * x[1] - 2;
    return Rational(t * t);
  };
  // Exact minimization of the weighted basic part over the cell's points.
  solver.minimize = [&solver](const CellView& cell, const std::vector<Value>& weights,
                              const Rational&) -> std::optional<Point> {
    std::optional<Point> best;
    Rational best_value;
    for (const auto& x : cell.members) {
      Rational v = 0;
      for (std::size_t j = 0; j < 3; ++j) v += *as_rational(weights[j]) * *as_rational(solver.evaluate(j, x));
      if (!best || v < best_value) {
        best = x;
        best_value = v;
      }
    }
    return best;
  };

  DriverOptions local = opts;
  local.cover.ground = off_axes;
  Evaluator f = [](const Point& x) -> Value { return Rational(motzkin_value(x)); };
  SolveReport report = approx_minimize(p, solver, motzkin_sliceable_parts(), f, eps, local);
  report.mode = "motzkin";

  std::uint64_t axis_points = 0;
  for (const auto& x : enumerate_integer_points(Region{p, {}, std::nullopt}, opts.cover.enumeration)) {
    if (off_axes(x)) continue;
    ++axis_points;
    Value v = f(x);
    if (report.status != SolveStatus::solved || better_candidate(v, x, report.value, report.x)) {
      report.status = SolveStatus::solved;
      report.x = x;
      report.value = v;
    }
  }
  report.notes.push_back(std::to_string(axis_points) + " axis points evaluated directly");
  return report;
}

SolveReport motzkin_demo(const Integer& k, const Rational& eps, const DriverOptions& opts) {
  if (k < 1) throw std::invalid_argument("box bound must be at least 1");
  return motzkin_solve(Polytope::cube(2, k), eps, opts);
}

}  // namespace sliceopt
