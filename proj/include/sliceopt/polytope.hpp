#pragma once

// Bounded polytopes {x : A x <= b}, regions cut out of them by extra linear
// and second-order-cone constraints, and exact lattice-point queries.
//
// Integer feasibility and integer-hull vertices are answered by exhaustive
// enumeration with interval pruning. This is exact at the small dimensions
// and coordinate ranges the library targets.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sliceopt/exactnum.hpp"
#include "sliceopt/linalg.hpp"

namespace sliceopt {

/// L(x) = coeffs . x + offset
struct AffineForm {
  std::vector<Integer> coeffs;
  Integer offset;

  Integer operator()(const Point& x) const;
  bool operator==(const AffineForm&) const = default;
};

enum class Relation { le, eq, ge };

/// coeffs . x (rel) rhs
struct LinearConstraint {
  std::vector<Integer> coeffs;
  Rational rhs;
  Relation rel = Relation::le;

  bool satisfied(const Point& x) const;
};

/// Closed interval; a missing end is unbounded.
struct Range {
  bool empty = false;
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

/// a . x <= b over the rationals.
struct Halfspace {
  std::vector<Rational> a;
  Rational b;
};

/// Exact range of objective . x over the polyhedron, by Fourier-Motzkin
/// elimination.
Range linear_range(const std::vector<Halfspace>& system, const std::vector<Rational>& objective);

class UnboundedPolytope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Polytope {
 public:
  /// Throws UnboundedPolytope when {A x <= b} is nonempty and unbounded.
  Polytope(IntMatrix a, std::vector<Integer> b);

  /// Axis-aligned box prod [lo_i, hi_i].
  static Polytope box(const std::vector<Integer>& lo, const std::vector<Integer>& hi);
  /// [-bound, bound]^n
  static Polytope cube(std::size_t n, const Integer& bound);

  std::size_t dim() const { return a_.cols(); }
  const IntMatrix& a() const { return a_; }
  const std::vector<Integer>& b() const { return b_; }

  bool contains(const Point& x) const;
  /// Coordinate bounding box of the real polytope; nullopt when it is empty.
  const std::optional<std::vector<Range>>& bounds() const { return bounds_; }
  std::vector<Halfspace> halfspaces() const;

 private:
  IntMatrix a_;
  std::vector<Integer> b_;
  std::optional<std::vector<Range>> bounds_;
};

/// |weight| * sum_i d_i (F_i . x)^2 - (beta + weight * axis . x)^2 <= 0 and
/// beta + weight * axis . x >= 0, the squared form of
/// sqrt(weight * sum_i d_i (F_i . x)^2) <= beta + weight * axis . x.
struct SocConstraint {
  std::vector<Integer> d;                   // d_i >= 0
  std::vector<std::vector<Integer>> forms;  // F_i, one per d_i
  Integer weight;                           // > 0
  std::vector<Integer> axis;
  Rational beta;

  bool satisfied(const Point& x) const;
};

/// Squared cone test given the radicand and the axis term weight * axis . x.
bool soc_holds(const Integer& radicand, const Integer& axis_term, const Rational& beta);

struct Region {
  Polytope base;
  std::vector<LinearConstraint> extra;
  std::optional<SocConstraint> soc;

  bool contains(const Point& x) const;
};

struct EnumerationOptions {
  /// Upper bound on the number of cells of the integer bounding box.
  std::uint64_t budget = 10'000'000;
};

Integer bounding_radius(const Polytope& p, std::span<const AffineForm> forms);

/// All integer points of the region in lexicographic order.
std::vector<Point> enumerate_integer_points(const Region& region, const EnumerationOptions& opts = {});
std::optional<Point> feasible_point(const Region& region, const EnumerationOptions& opts = {});

/// Vertices of conv(points), lexicographically sorted.
std::vector<Point> convex_hull_vertices(std::span<const Point> points);
/// Whether target is a convex combination of points (exact phase-1 simplex).
bool in_convex_hull(std::span<const Point> points, const Point& target);

std::vector<Point> integer_hull_vertices(const Polytope& p, const std::vector<LinearConstraint>& extra,
                                         const EnumerationOptions& opts = {});

}  // namespace sliceopt
