#pragma once

// Ground truth by enumeration and the exact check of the approximation
// guarantee: for the optimum f* and reported value v,
//   f* > 0:  v <= (1 + eps) f*
//   f* < 0:  v <= f* / (1 + eps)
//   f* = 0:  v = 0

#include <optional>
#include <string>
#include <utility>

#include "sliceopt/driver.hpp"
#include "sliceopt/polytope.hpp"
#include "sliceopt/sliceable.hpp"

namespace sliceopt {

struct Optimum {
  Point x;
  Value value;
};

/// Exact argmin of f over P ∩ Z^n; the lexicographically first minimizer wins.
/// Throws BudgetExceeded past the enumeration budget.
std::optional<Optimum> brute_force_min(const Polytope& p, const Evaluator& f, const EnumerationOptions& opts = {});

enum class OptimumSign { positive, negative, zero };

std::string to_string(OptimumSign tag);

struct Verdict {
  bool pass = false;
  OptimumSign tag = OptimumSign::zero;
  Value optimum = Rational(0);
  Value reported = Rational(0);
  /// Bound minus reported value, when both are rational.
  std::optional<Rational> slack;
  std::string reason;
};

/// Checks feasibility of report.x, that f(report.x) equals the reported value,
/// and the guarantee above, all in exact arithmetic.
Verdict verify_epsilon(const SolveReport& report, const Polytope& p, const Evaluator& f, const Optimum& exact,
                       const Rational& eps);

/// The guarantee alone, for a reported value.
Verdict verify_value(const Value& reported, const Value& optimum, const Rational& eps);

}  // namespace sliceopt
