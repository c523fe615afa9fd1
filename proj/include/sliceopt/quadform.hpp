#pragma once

// Minimization of f(x) = x^T Q x over P ∩ Z^n when Q has at most one negative
// or at most one positive eigenvalue.
//
// With Q' = Q (one negative) or Q' = -Q (one positive) decomposed as
// S D S^T = c^3 Q', d_n < 0 and L_i the columns of S:
//   g(x) = sqrt(|d_n| sum_{i<n} d_i L_i(x)^2) - |d_n| |L_n(x)|
//   s(x) = sqrt(|d_n| sum_{i<n} d_i L_i(x)^2) + |d_n| |L_n(x)|
// and g(x) s(x) = |d_n| c^3 x^T Q' x. s is sliceable with zeta 1; g is convex
// on each half L_n >= 0, L_n <= 0.

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>

#include "sliceopt/driver.hpp"
#include "sliceopt/linalg.hpp"
#include "sliceopt/polytope.hpp"
#include "sliceopt/sliceable.hpp"

namespace sliceopt {

class UnsupportedInertia : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class QuadCase { one_negative, one_positive };

struct QuadFormInstance {
  SymMatrix q;         // objective matrix
  QuadCase which = QuadCase::one_negative;
  Decomposition dec;   // of Q (one_negative) or -Q (one_positive), d_n < 0
  Inertia inertia;     // of Q
  Polytope p;
  Integer radius;      // >= 1, >= |d_i|, >= |L_i(x)| on P

  std::size_t dim() const { return q.size(); }
  /// |d_n|
  Integer axis_weight() const { return abs(dec.d.back()); }
};

/// Throws UnsupportedInertia when the required eigenvalue count is not exactly one.
QuadFormInstance make_quadform_instance(const SymMatrix& q, const Polytope& p, QuadCase which);

Integer eval_f(const SymMatrix& q, const Point& x);
/// x^T Q x for a possibly non-symmetric square matrix.
Integer eval_f(const IntMatrix& q, const Point& x);

/// |d_n| sum_{i<n} d_i L_i(x)^2
Integer g_radicand(const QuadFormInstance& inst, const Point& x);
/// sqrt(|d_n|) g(x) as sqrt(p) + q.
Surd eval_g_scaled(const QuadFormInstance& inst, const Point& x);
/// sqrt(|d_n|) s(x) as sqrt(p) + q.
Surd eval_s_scaled(const QuadFormInstance& inst, const Point& x);

/// Forms L_1..L_n, zeta 1, evaluator eval_s_scaled.
SliceableSpec sliceable_spec_for_s(const QuadFormInstance& inst);

/// 1 / (240 n^4 R^16): distinct values of eval_g_scaled on P differ by more.
Rational bisection_precision(const QuadFormInstance& inst);

/// Exact minimizer of eval_g_scaled over the given points: per half L_n >= 0
/// and L_n <= 0, bisection on beta in [-2nR^3, 2nR^3] with the cone test
/// sqrt(p) <= beta + |d_n| |L_n(x)|, stopped when one candidate remains or the
/// window is below bisection_precision. Ties go to the lexicographically
/// smallest point.
std::optional<std::pair<Point, Surd>> min_g(const QuadFormInstance& inst, std::span<const Point> points);
std::optional<std::pair<Point, Surd>> min_g(const QuadFormInstance& inst, const Region& region,
                                            const EnumerationOptions& opts = {});

/// Vertex of conv(points) minimizing f (one_positive instances, where -g is concave).
std::optional<std::pair<Point, Integer>> min_neg_g(const QuadFormInstance& inst, std::span<const Point> points);
std::optional<std::pair<Point, Integer>> min_neg_g(const QuadFormInstance& inst, const Region& region,
                                                   const EnumerationOptions& opts = {});

/// Comparison of eval_g_scaled values through rational approximations at
/// precision bisection_precision / 4; used to cross-check the exact order.
std::strong_ordering approx_compare_g(const QuadFormInstance& inst, const Point& x, const Point& y);

/// Approximation scheme for min x^T Q x. Semidefinite Q are solved exactly.
/// Throws UnsupportedInertia when Q has at least two positive and two
/// negative eigenvalues.
SolveReport fptas_quadform(const SymMatrix& q, const Polytope& p, const Rational& eps,
                           const DriverOptions& opts = {});

}  // namespace sliceopt
