#pragma once

// Exact solvers for x^T Q x over P ∩ Z^n: semidefinite cases, the sign-
// restricted cases of indefinite Q, and a dispatcher covering every 3x3 Q.
//
// Quasi-convex minimization is realized as bisection over the integer levels
// of f with exact enumeration as the feasibility test; quasi-concave
// minimization as evaluation on the vertices of the integer hull.

#include <optional>
#include <utility>

#include "sliceopt/driver.hpp"
#include "sliceopt/quadform.hpp"

namespace sliceopt {

/// max |x^T Q x| over the bounding box of P.
Integer objective_bound(const SymMatrix& q, const Polytope& p);

/// min f over C ∩ P ∩ Z^n with C = {f <= 0, sign * L_n(x) >= 0}, where
/// sign is +1 or -1 (one_negative instances; on each such C, f is quasi-convex).
std::optional<std::pair<Point, Integer>> quasiconvex_min_region(const QuadFormInstance& inst, int halfspace_sign,
                                                                const EnumerationOptions& opts = {});

/// Positive semidefinite Q: exact optimum by bisection over integer levels.
SolveReport convex_exact(const SymMatrix& q, const Polytope& p, const EnumerationOptions& opts = {});
/// Negative semidefinite Q: exact optimum on the integer-hull vertices.
SolveReport concave_exact(const SymMatrix& q, const Polytope& p, const EnumerationOptions& opts = {});

/// Exact optimum when Q has one negative eigenvalue and the optimum is <= 0,
/// or Q has one positive eigenvalue and the optimum is >= 0; nullopt when
/// neither applies. Returns an infeasible report when P ∩ Z^n is empty.
/// Throws UnsupportedInertia unless Q has exactly one negative or exactly one
/// positive eigenvalue.
std::optional<SolveReport> exact_solve(const SymMatrix& q, const Polytope& p, const EnumerationOptions& opts = {});

/// Any symmetric 3x3 Q: semidefinite cases exactly, otherwise exact_solve
/// with the approximation scheme as fallback.
SolveReport solve_dim3(const SymMatrix& q, const Polytope& p, const Rational& eps, const DriverOptions& opts = {});

}  // namespace sliceopt
