#pragma once

// Sliceable functions: nonnegative functions whose value varies by at most a
// factor (1 + eps) between integer points sharing a slice of ratio
// 1 + eps / zeta. Closure rules: scaling, sums, products and reciprocals.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sliceopt/exactnum.hpp"
#include "sliceopt/polytope.hpp"
#include "sliceopt/slicing.hpp"

namespace sliceopt {

inline constexpr std::uint64_t kDefaultZetaCap = 64;

using Evaluator = std::function<Value(const Point&)>;

struct SliceableSpec {
  std::vector<AffineForm> forms;
  std::uint64_t zeta = 1;
  Evaluator evaluate;

  /// Slicing parameters for accuracy eps: ratio 1 + eps / zeta.
  SliceParams params(const Rational& eps) const;
};

/// The constant function c >= 0 (no forms, zeta 1).
SliceableSpec constant_spec(const Rational& c);

/// |L(x)|^exponent. zeta is the least integer with (1 + 1/zeta)^exponent <= 2,
/// which makes the slice bound hold for every 0 < eps <= 1.
SliceableSpec form_power(const AffineForm& form, unsigned exponent);

/// prod_i |L_i(x)|^{e_i}, with zeta chosen for the total degree as in form_power.
SliceableSpec form_monomial(const std::vector<std::pair<AffineForm, unsigned>>& factors);

/// Throws std::domain_error for negative lambda.
SliceableSpec scale(const Rational& lambda, const SliceableSpec& s);
/// zeta = max; throws std::domain_error past zeta_cap.
SliceableSpec add(const SliceableSpec& s, const SliceableSpec& r, std::uint64_t zeta_cap = kDefaultZetaCap);
/// zeta = 4 max; throws std::domain_error past zeta_cap.
SliceableSpec multiply(const SliceableSpec& s, const SliceableSpec& r, std::uint64_t zeta_cap = kDefaultZetaCap);
/// 1/s with the parameters of s. Evaluation at a zero of s throws std::domain_error.
SliceableSpec reciprocal(const SliceableSpec& s);

struct SliceCheck {
  enum class Outcome { pass, fail, rejected };

  Outcome outcome = Outcome::pass;
  /// Failing pair (s(x) > (1+eps) s(y)) or, when rejected, the offending point.
  std::optional<std::pair<Point, Point>> witness;
  std::uint64_t pairs_checked = 0;
  std::string reason;
};

/// Tests s(x) <= (1 + eps) s(y) over pairs of integer points of P sharing a
/// slice. trials == 0 checks every pair; otherwise `trials` seeded random pairs.
SliceCheck check_sliceable(const SliceableSpec& s, const Polytope& p, const Rational& eps, std::uint64_t trials = 0,
                           std::uint64_t seed = 1, const EnumerationOptions& opts = {});

}  // namespace sliceopt
