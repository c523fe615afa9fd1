#pragma once

// M(x, y) = x^4 y^2 + x^2 y^4 - 3 x^2 y^2 + 1 minimized with the generic
// driver through
//   M = s1 + s2 + (x^2 + y^2 - 2)^2 s3   off the axes, where
//   s1 = y^2 (1-x)^2 (1+x)^2 / (x^2+y^2)
//   s2 = x^2 (1-y)^2 (1+y)^2 / (x^2+y^2)
//   s3 = x^2 y^2 / (x^2+y^2).
// Points with x = 0 or y = 0 are evaluated directly.

#include "sliceopt/driver.hpp"
#include "sliceopt/sliceable.hpp"

namespace sliceopt {

Integer motzkin_value(const Point& x);

/// s1, s2, s3 as sliceable specs.
std::vector<SliceableSpec> motzkin_sliceable_parts();

SolveReport motzkin_solve(const Polytope& p, const Rational& eps, const DriverOptions& opts = {});
/// motzkin_solve over [-K, K]^2.
SolveReport motzkin_demo(const Integer& k, const Rational& eps, const DriverOptions& opts = {});

}  // namespace sliceopt
