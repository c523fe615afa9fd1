#include <doctest.h>

#include <random>
#include <set>

#include "sliceopt/slicing.hpp"
#include "support/reference.hpp"

using namespace sliceopt;

namespace {
Integer I(long v) { return Integer(v); }
Rational Q(long n, long d) { return make_rational(Integer(n), Integer(d)); }
std::vector<Integer> V(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.push_back(Integer(x));
  return out;
}
AffineForm F(std::initializer_list<long> c, long off = 0) { return AffineForm{V(c), I(off)}; }

bool satisfies(const Point& x, const std::vector<LinearConstraint>& cs) {
  for (const auto& c : cs)
    if (!c.satisfied(x)) return false;
  return true;
}
}  // namespace

TEST_CASE("level_index examples") {
  CHECK(level_index(I(3), Q(2, 1)) == 2);
  CHECK(level_index(I(0), Q(2, 1)) == 0);
  CHECK(level_index(I(-1), Q(3, 2)) == -1);
  CHECK(level_index(I(1), Q(3, 2)) == 1);
  CHECK(level_index(I(2), Q(2, 1)) == 1);
  CHECK(level_index(I(-4), Q(2, 1)) == -2);
  CHECK(level_index(I(1024), Q(5, 4)) == 32);
}

TEST_CASE("level_index is monotone and consistent with exact powers") {
  for (Rational ratio : {Q(2, 1), Q(5, 4), Q(81, 80), Q(1025, 1024)}) {
    long long prev = 0;
    for (long v = 1; v <= 3000; v += (v < 100 ? 1 : 37)) {
      long long k = level_index(I(v), ratio);
      CHECK(k >= prev);
      prev = k;
      // ratio^(k-1) < v <= ratio^k
      CHECK(Rational(v) <= pow(ratio, static_cast<unsigned long>(k)));
      if (k > 1) CHECK(Rational(v) > pow(ratio, static_cast<unsigned long>(k - 1)));
      CHECK(level_index(I(-v), ratio) == -k);
    }
  }
}

TEST_CASE("canonical_key examples") {
  SliceParams params{{F({1, 0}), F({0, 1})}, Q(2, 1)};
  CHECK(canonical_key({I(3), I(0)}, params).k == std::vector<long long>{2, 0});
  CHECK(canonical_key({I(1), I(1)}, params).k == std::vector<long long>{1, 1});
  CHECK(canonical_key({I(-4), I(2)}, params).k == std::vector<long long>{-2, 1});
  SliceParams fine{{F({1, 0}), F({0, 1})}, Q(7, 6)};
  CHECK(canonical_key({I(1), I(1)}, fine).k == std::vector<long long>{1, 1});
}

TEST_CASE("slice_constraints examples") {
  SliceParams params{{F({1})}, Q(2, 1)};
  auto zero = slice_constraints(SliceKey{{0}}, params);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].rel == Relation::eq);
  CHECK(zero[0].rhs == 0);

  auto two = slice_constraints(SliceKey{{2}}, params);
  for (long x = -10; x <= 10; ++x) CHECK(satisfies({I(x)}, two) == (x >= 2 && x <= 4));

  // Negative bands mirror the positive ones: k = -1 is -2 <= L <= -1.
  auto neg = slice_constraints(SliceKey{{-1}}, params);
  for (long x = -10; x <= 10; ++x) CHECK(satisfies({I(x)}, neg) == (x >= -2 && x <= -1));
}

TEST_CASE("every point satisfies the constraints of its canonical key") {
  SliceParams params{{F({1, 2}, -1), F({-3, 1}, 2), F({1, 1})}, Q(5, 4)};
  for (const auto& x : reference::cube_points(2, 8)) {
    SliceKey key = canonical_key(x, params);
    CHECK(in_slice(x, key, params));
    CHECK(satisfies(x, slice_constraints(key, params)));
  }
}

TEST_CASE("level_cap examples") {
  CHECK(level_cap(I(1024), Q(5, 4)) == 32);
  CHECK(pow(Q(5, 4), 31) < 1024);
  CHECK(pow(Q(5, 4), 32) >= 1024);
  CHECK(level_cap(I(1), Q(5, 4)) == 0);
  CHECK(level_cap(I(8), Q(2, 1)) == 3);
}

TEST_CASE("cover examples") {
  SliceParams params{{F({1})}, Q(2, 1)};
  auto cells = cover(Polytope::box(V({1}), V({4})), params, 3);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].key.k == std::vector<long long>{1});
  CHECK(cells[1].key.k == std::vector<long long>{2});
  // 2 lies on the boundary of bands 1 and 2.
  CHECK(cells[0].members == std::vector<Point>{{I(1)}, {I(2)}});
  CHECK(cells[1].members == std::vector<Point>{{I(2)}, {I(3)}, {I(4)}});

  SliceParams two{{F({1, 0}), F({0, 1})}, Q(2, 1)};
  auto single = cover(Polytope::box(V({0, 0}), V({0, 0})), two, 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].key.k == std::vector<long long>{0, 0});

  IntMatrix a(2, 1);
  a(0, 0) = 2;
  a(1, 0) = -2;
  Polytope no_integer(a, V({1, -1}));  // 2x <= 1, 2x >= 1
  CHECK(cover(no_integer, params, 3).empty());
  CHECK(cover(no_integer, params, 3, CoverOptions{CoverStrategy::cells, {}, {}}).empty());
}

TEST_CASE("cap violations are reported") {
  SliceParams params{{F({1})}, Q(2, 1)};
  CHECK_THROWS_AS(cover(Polytope::box(V({1}), V({16})), params, 2), std::logic_error);
}

TEST_CASE("both cover strategies cover every point with consistent members") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> c(-2, 2), off(-3, 3);
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 1 + t % 3;
    const long bound = n == 3 ? 3 : 6;
    SliceParams params;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Integer> coeffs;
      for (std::size_t i = 0; i < n; ++i) coeffs.push_back(I(c(rng)));
      params.forms.push_back(AffineForm{coeffs, I(off(rng))});
    }
    params.ratio = t % 2 ? Q(3, 2) : Q(11, 10);
    Polytope p = Polytope::cube(n, I(bound));
    long long cap = level_cap(bounding_radius(p, params.forms), params.ratio);
    auto by_points = cover(p, params, cap);
    auto by_cells = cover(p, params, cap, CoverOptions{CoverStrategy::cells, {}, {}});

    std::set<SliceKey> keys;
    for (const auto& cell : by_points) keys.insert(cell.key);
    for (const auto& x : reference::cube_points(n, bound)) CHECK(keys.count(canonical_key(x, params)) == 1);

    for (const auto* cells : {&by_points, &by_cells}) {
      std::set<Point> covered;
      for (const auto& cell : *cells) {
        CHECK_FALSE(cell.members.empty());
        CHECK(std::find(cell.members.begin(), cell.members.end(), cell.representative) != cell.members.end());
        for (const auto& x : cell.members) {
          CHECK(in_slice(x, cell.key, params));
          covered.insert(x);
        }
      }
      CHECK(covered.size() == reference::cube_points(n, bound).size());
    }
  }
}

TEST_CASE("ground filter removes points from the cover") {
  SliceParams params{{F({1, 0}), F({0, 1})}, Q(3, 2)};
  CoverOptions opts;
  opts.ground = [](const Point& x) { return x[0] != 0 && x[1] != 0; };
  for (const auto& cell : cover(Polytope::cube(2, I(3)), params, 10, opts))
    for (const auto& x : cell.members) CHECK(opts.ground(x));
}
