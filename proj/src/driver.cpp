#include "sliceopt/driver.hpp"

#include <algorithm>
#include <stdexcept>

namespace sliceopt {

Rational clamp_epsilon(const Rational& eps, std::vector<std::string>* notes) {
  if (eps <= 0) throw std::domain_error("epsilon must be positive");
  if (eps < 1) return eps;
  Rational clamped = 1 - make_rational(1, 1024);
  if (notes) notes->push_back("epsilon " + to_string(eps) + " clamped to " + to_string(clamped));
  return clamped;
}

bool better_candidate(const Value& value, const Point& x, const Value& best_value, const Point& best_x) {
  auto c = value_compare(value, best_value);
  return c < 0 || (c == 0 && x < best_x);
}

namespace {

std::uint64_t zeta_max(const std::vector<SliceableSpec>& s) {
  std::uint64_t z = 1;
  for (const auto& spec : s) z = std::max(z, spec.zeta);
  return z;
}

// Shared cell loop. With freeze_weights, cell weights are s_j(rep) / (1 + eps/4);
// otherwise all weights are 1.
SolveReport run_cells(const Polytope& p, const BasicSolver& solver, const std::vector<SliceableSpec>& s,
                      const Evaluator& f_eval, const Rational& eps, const DriverOptions& opts, bool freeze_weights) {
  SolveReport report;
  Rational e = clamp_epsilon(eps, &report.notes);
  report.epsilon = e;
  const Rational e_sub = e / 4;

  SliceParams params;
  for (const auto& spec : s) params.forms.insert(params.forms.end(), spec.forms.begin(), spec.forms.end());
  params.ratio = 1 + e_sub / Rational(Integer(std::to_string(zeta_max(s))));
  const Integer radius = bounding_radius(p, params.forms);
  // Band 1 holds |L| = 1, so the cap is at least 1 even when R = 1.
  const long long cap = std::max(1LL, level_cap(radius, params.ratio));

  const auto cells = cover(p, params, cap, opts.cover);
  report.cells = cells.size();

  std::optional<Value> best_value;
  for (const auto& cell : cells) {
    if (cell.members.empty()) continue;
    Region region{p, slice_constraints(cell.key, params), std::nullopt};
    std::vector<Value> weights(solver.terms, Value(Rational(1)));
    if (freeze_weights) {
      for (std::size_t j = 0; j < solver.terms; ++j)
        weights[j] = value_scale(Rational(1 / (1 + e_sub)), s[j].evaluate(cell.representative));
    }
    ++report.subproblems;
    auto x = solver.minimize(CellView{region, cell.members}, weights, e_sub);
    if (!x) continue;
    Value v = f_eval(*x);
    if (!best_value || better_candidate(v, *x, *best_value, report.x)) {
      best_value = v;
      report.x = *x;
    }
  }
  if (best_value) {
    report.status = SolveStatus::solved;
    report.value = *best_value;
  }
  return report;
}

}  // namespace

SolveReport approx_minimize(const Polytope& p, const BasicSolver& solver, const std::vector<SliceableSpec>& s,
                            const Evaluator& f_eval, const Rational& eps, const DriverOptions& opts) {
  if (s.size() != solver.terms) throw std::invalid_argument("one sliceable spec per basic function required");
  return run_cells(p, solver, s, f_eval, eps, opts, true);
}

SolveReport approx_minimize_product(const Polytope& p, const BasicSolver& solver, const SliceableSpec& s,
                                    const Evaluator& f_eval, const Rational& eps, const DriverOptions& opts) {
  if (solver.terms != 1) throw std::invalid_argument("product form needs exactly one basic function");
  return run_cells(p, solver, {s}, f_eval, eps, opts, false);
}

}  // namespace sliceopt
