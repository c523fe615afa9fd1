#include <doctest.h>

#include <random>

#include "sliceopt/linalg.hpp"
#include "support/sturm.hpp"

using namespace sliceopt;

namespace {
IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = Integer(v);
    ++i;
  }
  return m;
}

IntMatrix diag(std::initializer_list<long> d) {
  IntMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (long v : d) {
    m(i, i) = Integer(v);
    ++i;
  }
  return m;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) q(i, j) = q(j, i) = Integer(dist(rng));
  return q;
}
}  // namespace

TEST_CASE("SymMatrix rejects non-symmetric input and symmetrizes on request") {
  CHECK_THROWS_AS(SymMatrix(M({{1, 2}, {0, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix(IntMatrix(2, 3)), std::invalid_argument);
  bool doubled = false;
  SymMatrix s = SymMatrix::symmetrized(M({{1, 2}, {0, 1}}), &doubled);
  CHECK(doubled);
  CHECK(s.entries() == M({{2, 2}, {2, 2}}));
  SymMatrix t = SymMatrix::symmetrized(M({{1, 2}, {2, 1}}), &doubled);
  CHECK_FALSE(doubled);
  CHECK(t.entries() == M({{1, 2}, {2, 1}}));
}

TEST_CASE("inertia examples") {
  CHECK(inertia(SymMatrix(diag({2, -3, 0}))) == Inertia{1, 1, 1});
  CHECK(inertia(SymMatrix(M({{0, 1}, {1, 0}}))) == Inertia{1, 1, 0});
  CHECK(inertia(SymMatrix(IntMatrix(3, 3))) == Inertia{0, 0, 3});
}

TEST_CASE("decompose examples") {
  SymMatrix q1(diag({1, -1}));
  Decomposition d1 = decompose(q1);
  CHECK(d1.s == IntMatrix::identity(2));
  CHECK(d1.d == std::vector<Integer>{1, -1});
  CHECK(d1.c == 1);

  // Zero diagonal: any S with S D S^T = c^3 Q is valid; the spec'd example
  // S = [[2,2],[2,-2]], D = diag(1,-1), c = 2 is one of them.
  SymMatrix q2(M({{0, 1}, {1, 0}}));
  Decomposition d2 = decompose(q2);
  CHECK(reconstructs(d2, q2));
  CHECK(inertia(d2) == Inertia{1, 1, 0});
  Decomposition spec_example{M({{2, 2}, {2, -2}}), {1, -1}, 2};
  CHECK(reconstructs(spec_example, q2));

  SymMatrix q3(diag({4}));
  Decomposition d3 = decompose(q3);
  CHECK(d3.s == IntMatrix::identity(1));
  CHECK(d3.d == std::vector<Integer>{4});
  CHECK(d3.c == 1);
}

TEST_CASE("decomposition forms are the columns of S") {
  Decomposition dec{M({{1, 2}, {3, 4}}), {1, -1}, 1};
  CHECK(dec.form(0) == std::vector<Integer>{1, 3});
  CHECK(dec.form(1) == std::vector<Integer>{2, 4});
}

TEST_CASE("reorder_for_one_negative examples") {
  Decomposition a{M({{1, 2}, {3, 4}}), {-1, 2}, 1};
  Decomposition ra = reorder_for_one_negative(a);
  CHECK(ra.d == std::vector<Integer>{2, -1});
  CHECK(ra.s == M({{2, 1}, {4, 3}}));

  Decomposition b{IntMatrix::identity(2), {3, 5}, 1};
  CHECK(reorder_for_one_negative(b).d == std::vector<Integer>{3, 5});

  Decomposition c{IntMatrix::identity(3), {0, -7, 1}, 1};
  Decomposition rc = reorder_for_one_negative(c);
  CHECK(rc.d.back() == -7);
  CHECK(rc.d[0] >= 0);
  CHECK(rc.d[1] >= 0);
  SymMatrix qc(diag({0, -7, 1}));
  CHECK(reconstructs(rc, qc));

  Decomposition two{IntMatrix::identity(2), {-1, -2}, 1};
  CHECK_THROWS_AS(reorder_for_one_negative(two), std::invalid_argument);
}

TEST_CASE("Sturm oracle on known spectra") {
  CHECK(sturm::inertia(diag({2, -3, 0})) == Inertia{1, 1, 1});
  CHECK(sturm::inertia(M({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
  CHECK(sturm::inertia(M({{1, 1}, {1, 1}})) == Inertia{1, 0, 1});
  CHECK(sturm::inertia(diag({-2, -2, 5, 0})) == Inertia{1, 2, 1});
  CHECK(sturm::inertia(diag({3, 3, 3})) == Inertia{3, 0, 0});
}

TEST_CASE("random round trip, Sylvester and Sturm agreement") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 500; ++t) {
    std::size_t n = 1 + t % 4;
    IntMatrix raw = random_symmetric(rng, n, 10);
    if (t % 7 == 0) raw(0, 0) = 0;  // exercise zero pivots
    SymMatrix q(raw);
    Decomposition dec = decompose(q);
    REQUIRE(reconstructs(dec, q));
    CHECK(dec.c >= 1);
    Inertia in = inertia(q);
    CHECK(in.positive + in.negative + in.zero == static_cast<int>(n));
    CHECK(in == sturm::inertia(raw));
    Inertia neg = inertia(q.negated());
    CHECK(neg.positive == in.negative);
    CHECK(neg.negative == in.positive);
    if (in.negative <= 1) {
      Decomposition r = reorder_for_one_negative(dec);
      CHECK(reconstructs(r, q));
      for (std::size_t i = 0; i + 1 < n; ++i) CHECK(r.d[i] >= 0);
    }
  }
}
