#include "sliceopt/oracle.hpp"

namespace sliceopt {

std::optional<Optimum> brute_force_min(const Polytope& p, const Evaluator& f, const EnumerationOptions& opts) {
  std::optional<Optimum> best;
  for (auto& x : enumerate_integer_points(Region{p, {}, std::nullopt}, opts)) {
    Value v = f(x);
    if (!best || value_compare(v, best->value) < 0) best = Optimum{std::move(x), std::move(v)};
  }
  return best;
}

std::string to_string(OptimumSign tag) {
  switch (tag) {
    case OptimumSign::positive:
      return "positive-opt";
    case OptimumSign::negative:
      return "negative-opt";
    case OptimumSign::zero:
      return "zero-opt";
  }
  return "?";
}

Verdict verify_value(const Value& reported, const Value& optimum, const Rational& eps) {
  Verdict v;
  v.optimum = optimum;
  v.reported = reported;
  const int s = value_sign(optimum);
  const auto opt = as_rational(optimum);
  const auto rep = as_rational(reported);
  if (s > 0) {
    v.tag = OptimumSign::positive;
    v.pass = scaled_difference_sign(reported, 1 + eps, optimum) <= 0;
    if (opt && rep) v.slack = (1 + eps) * *opt - *rep;
  } else if (s < 0) {
    v.tag = OptimumSign::negative;
    v.pass = scaled_difference_sign(reported, 1 / (1 + eps), optimum) <= 0;
    if (opt && rep) v.slack = *opt / (1 + eps) - *rep;
  } else {
    v.tag = OptimumSign::zero;
    v.pass = value_sign(reported) == 0;
    if (rep) v.slack = -abs(*rep);
  }
  if (!v.pass) v.reason = "reported " + to_string(reported) + " violates the bound for optimum " + to_string(optimum);
  return v;
}

Verdict verify_epsilon(const SolveReport& report, const Polytope& p, const Evaluator& f, const Optimum& exact,
                       const Rational& eps) {
  if (report.status != SolveStatus::solved) {
    Verdict v;
    v.optimum = exact.value;
    v.reason = "report is not solved although a feasible point exists";
    return v;
  }
  Verdict v = verify_value(report.value, exact.value, eps);
  if (report.x.size() != p.dim() || !p.contains(report.x)) {
    v.pass = false;
    v.reason = "reported point " + to_string(report.x) + " is not in P";
  } else if (value_compare(f(report.x), report.value) != 0) {
    v.pass = false;
    v.reason = "reported value " + to_string(report.value) + " differs from f(x) = " + to_string(f(report.x));
  }
  return v;
}

}  // namespace sliceopt
