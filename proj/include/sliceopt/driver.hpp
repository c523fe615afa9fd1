#pragma once

// Generic approximation scheme for min sum_j g_j(x) s_j(x) over P ∩ Z^n:
// slice P so every s_j is nearly constant on each cell, freeze s_j at a
// representative point, minimize the weighted basic part per cell and keep
// the best cell answer under the true objective.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sliceopt/exactnum.hpp"
#include "sliceopt/polytope.hpp"
#include "sliceopt/sliceable.hpp"
#include "sliceopt/slicing.hpp"

namespace sliceopt {

/// One cell as handed to a subsolver: the region P ∩ B_k and its integer
/// points (restricted to the ground set).
struct CellView {
  const Region& region;
  std::span<const Point> members;
};

/// Subproblem capability for the basic functions g_1..g_m.
struct BasicSolver {
  std::size_t terms = 1;
  /// Exact g_j(x).
  std::function<Value(std::size_t j, const Point& x)> evaluate;
  /// An eps-approximate minimizer of sum_j weights[j] * g_j over the cell;
  /// nullopt when the cell has no integer point.
  std::function<std::optional<Point>(const CellView& cell, const std::vector<Value>& weights, const Rational& eps)>
      minimize;
};

enum class SolveStatus { solved, infeasible };

struct SolveReport {
  SolveStatus status = SolveStatus::infeasible;
  Point x;
  Value value = Rational(0);
  Rational epsilon;
  std::string mode;
  std::uint64_t cells = 0;
  std::uint64_t subproblems = 0;
  /// Auxiliary exact quantity of the winner (the scaled basic part g for quadratic forms).
  std::optional<Surd> surrogate;
  /// True when the value is certified optimal rather than approximate.
  bool exact = false;
  std::vector<std::string> notes;
};

struct DriverOptions {
  CoverOptions cover;
};

/// eps clamped into (0, 1): eps >= 1 becomes 1 - 1/1024 (with a note).
Rational clamp_epsilon(const Rational& eps, std::vector<std::string>* notes = nullptr);

/// True when candidate beats incumbent: smaller value, ties to the
/// lexicographically smaller point.
bool better_candidate(const Value& value, const Point& x, const Value& best_value, const Point& best_x);

SolveReport approx_minimize(const Polytope& p, const BasicSolver& solver, const std::vector<SliceableSpec>& s,
                            const Evaluator& f_eval, const Rational& eps, const DriverOptions& opts = {});

/// m = 1: the subsolver minimizes g alone per cell, so s is never evaluated
/// inside subproblems.
SolveReport approx_minimize_product(const Polytope& p, const BasicSolver& solver, const SliceableSpec& s,
                                    const Evaluator& f_eval, const Rational& eps, const DriverOptions& opts = {});

}  // namespace sliceopt
