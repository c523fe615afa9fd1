#pragma once

// Multiplicative slices B_k: for each linear form L_j the band index k_j
// selects
//   ratio^(k-1) <= L_j(x) <= ratio^k          (k >= 1)
//   L_j(x) = 0                                (k = 0)
//   -ratio^(-k) <= L_j(x) <= -ratio^(-k-1)    (k <= -1)

#include <functional>
#include <vector>

#include "sliceopt/exactnum.hpp"
#include "sliceopt/polytope.hpp"

namespace sliceopt {

struct SliceParams {
  std::vector<AffineForm> forms;
  Rational ratio;  // > 1
};

struct SliceKey {
  std::vector<long long> k;

  auto operator<=>(const SliceKey&) const = default;
};

std::string to_string(const SliceKey& key);

/// Exact band lookup for one ratio. Caches the powers it has computed, so a
/// LevelScale must not be shared between threads.
class LevelScale {
 public:
  explicit LevelScale(Rational ratio);

  const Rational& ratio() const { return ratio_; }

  /// Canonical band of L: the band of smallest magnitude containing L.
  long long index(const Integer& value) const;
  /// Every band containing L (two when |L| is an exact power of the ratio).
  std::vector<long long> admissible(const Integer& value) const;
  /// ratio^k, k >= 0
  Rational power(long long k) const;
  /// Largest integer in band k.
  Integer band_top(long long k) const;

 private:
  bool within(const Integer& magnitude, long long k) const;  // magnitude <= ratio^k
  const std::pair<Integer, Integer>& powers(long long k) const;

  Rational ratio_;
  mutable std::vector<std::pair<Integer, Integer>> powers_;
};

long long level_index(const Integer& value, const Rational& ratio);
SliceKey canonical_key(const Point& x, const SliceParams& params);
bool in_slice(const Point& x, const SliceKey& key, const SliceParams& params);
std::vector<LinearConstraint> slice_constraints(const SliceKey& key, const SliceParams& params);
/// Smallest N >= 0 with ratio^N >= R.
long long level_cap(const Integer& R, const Rational& ratio);

/// A nonempty slice of the polytope: every integer point of P inside B_k
/// (restricted to the ground set), with one of them as representative.
struct Cell {
  SliceKey key;
  Point representative;
  std::vector<Point> members;
};

enum class CoverStrategy {
  points,  // group the integer points of P by canonical key
  cells,   // walk the cells of the level-hyperplane arrangement inside P
};

struct CoverOptions {
  CoverStrategy strategy = CoverStrategy::points;
  EnumerationOptions enumeration;
  /// Optional ground-set filter; points failing it are not covered.
  std::function<bool(const Point&)> ground;
};

/// Keys whose slices jointly contain every (ground) integer point of P, in
/// increasing key order. Throws std::logic_error if a key exceeds the cap N.
std::vector<Cell> cover(const Polytope& p, const SliceParams& params, long long cap, const CoverOptions& opts = {});

}  // namespace sliceopt
