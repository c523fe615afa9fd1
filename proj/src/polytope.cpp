#include "sliceopt/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sliceopt {

Integer AffineForm::operator()(const Point& x) const {
  Integer v = offset;
  for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * x[i];
  return v;
}

bool LinearConstraint::satisfied(const Point& x) const {
  Integer lhs = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) lhs += coeffs[i] * x[i];
  switch (rel) {
    case Relation::le: return Rational(lhs) <= rhs;
    case Relation::ge: return Rational(lhs) >= rhs;
    case Relation::eq: return Rational(lhs) == rhs;
  }
  return false;
}

namespace {

// Scales a halfspace so that its first nonzero coefficient has magnitude 1.
// Returns false for a trivial row 0 <= b.
bool normalize(Halfspace& h) {
  auto lead = std::find_if(h.a.begin(), h.a.end(), [](const Rational& v) { return v != 0; });
  if (lead == h.a.end()) return false;
  Rational s = abs(*lead);
  if (s != 1) {
    for (auto& v : h.a) v /= s;
    h.b /= s;
  }
  return true;
}

// Fourier-Motzkin elimination of variable v. Returns false on infeasibility.
bool eliminate(std::vector<Halfspace>& sys, std::size_t v) {
  std::vector<Halfspace> pos, neg;
  std::map<std::vector<Rational>, Rational> kept;
  auto keep = [&](Halfspace h) -> bool {
    if (!normalize(h)) return h.b >= 0;
    auto [it, inserted] = kept.try_emplace(std::move(h.a), h.b);
    if (!inserted && h.b < it->second) it->second = h.b;
    return true;
  };
  for (auto& h : sys) {
    int s = sign(h.a[v]);
    if (s > 0) pos.push_back(std::move(h));
    else if (s < 0) neg.push_back(std::move(h));
    else if (!keep(std::move(h))) return false;
  }
  for (const auto& p : pos)
    for (const auto& n : neg) {
      // p.a[v] > 0, n.a[v] < 0: combine to cancel v
      Rational fp = -n.a[v];
      Rational fn = p.a[v];
      Halfspace h{std::vector<Rational>(p.a.size()), fp * p.b + fn * n.b};
      for (std::size_t i = 0; i < h.a.size(); ++i) h.a[i] = fp * p.a[i] + fn * n.a[i];
      h.a[v] = 0;
      if (!keep(std::move(h))) return false;
    }
  sys.clear();
  for (auto& [a, b] : kept) sys.push_back({a, b});
  return true;
}

}  // namespace

Range linear_range(const std::vector<Halfspace>& system, const std::vector<Rational>& objective) {
  const std::size_t n = objective.size();
  // append t = objective . x as variable n
  std::vector<Halfspace> sys;
  sys.reserve(system.size() + 2);
  for (const auto& h : system) {
    Halfspace e{h.a, h.b};
    e.a.push_back(0);
    sys.push_back(std::move(e));
  }
  Halfspace up{objective, 0}, down{std::vector<Rational>(n + 1), 0};
  up.a.push_back(-1);
  for (std::size_t i = 0; i < n; ++i) down.a[i] = -objective[i];
  down.a[n] = 1;
  sys.push_back(std::move(up));
  sys.push_back(std::move(down));

  Range out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!eliminate(sys, v)) {
      out.empty = true;
      return out;
    }
  }
  for (const auto& h : sys) {
    const Rational& c = h.a[n];
    if (c > 0) {
      Rational hi = h.b / c;
      if (!out.hi || hi < *out.hi) out.hi = hi;
    } else if (c < 0) {
      Rational lo = h.b / c;
      if (!out.lo || lo > *out.lo) out.lo = lo;
    } else if (h.b < 0) {
      out.empty = true;
    }
  }
  if (out.lo && out.hi && *out.lo > *out.hi) out.empty = true;
  return out;
}

namespace {

std::optional<std::vector<Range>> coordinate_bounds(const std::vector<Halfspace>& sys, std::size_t n) {
  std::vector<Range> box(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> e(n);
    e[i] = 1;
    box[i] = linear_range(sys, e);
    if (box[i].empty) return std::nullopt;
  }
  return box;
}

}  // namespace

Polytope::Polytope(IntMatrix a, std::vector<Integer> b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.size()) throw std::invalid_argument("polytope: A and b have different row counts");
  if (a_.cols() == 0) throw std::invalid_argument("polytope: dimension must be positive");
  bounds_ = coordinate_bounds(halfspaces(), dim());
  if (bounds_) {
    for (const auto& r : *bounds_)
      if (!r.lo || !r.hi) throw UnboundedPolytope("polytope is unbounded");
  }
}

Polytope Polytope::box(const std::vector<Integer>& lo, const std::vector<Integer>& hi) {
  const std::size_t n = lo.size();
  if (hi.size() != n) throw std::invalid_argument("box: bound vectors differ in length");
  IntMatrix a(2 * n, n);
  std::vector<Integer> b(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 1;
    b[i] = hi[i];
    a(n + i, i) = -1;
    b[n + i] = -lo[i];
  }
  return Polytope(std::move(a), std::move(b));
}

Polytope Polytope::cube(std::size_t n, const Integer& bound) {
  return box(std::vector<Integer>(n, Integer(-bound)), std::vector<Integer>(n, bound));
}

bool Polytope::contains(const Point& x) const {
  if (x.size() != dim()) return false;
  for (std::size_t r = 0; r < a_.rows(); ++r) {
    Integer lhs = 0;
    for (std::size_t j = 0; j < dim(); ++j) lhs += a_(r, j) * x[j];
    if (lhs > b_[r]) return false;
  }
  return true;
}

std::vector<Halfspace> Polytope::halfspaces() const {
  std::vector<Halfspace> out;
  out.reserve(a_.rows());
  for (std::size_t r = 0; r < a_.rows(); ++r) {
    Halfspace h{std::vector<Rational>(dim()), Rational(b_[r])};
    for (std::size_t j = 0; j < dim(); ++j) h.a[j] = Rational(a_(r, j));
    out.push_back(std::move(h));
  }
  return out;
}

bool soc_holds(const Integer& radicand, const Integer& axis_term, const Rational& beta) {
  Rational rhs = beta + Rational(axis_term);
  if (rhs < 0) return false;
  return Rational(radicand) <= rhs * rhs;
}

bool SocConstraint::satisfied(const Point& x) const {
  Integer sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Integer v = 0;
    for (std::size_t j = 0; j < x.size(); ++j) v += forms[i][j] * x[j];
    sum += d[i] * v * v;
  }
  Integer ax = 0;
  for (std::size_t j = 0; j < x.size(); ++j) ax += axis[j] * x[j];
  return soc_holds(weight * sum, weight * ax, beta);
}

bool Region::contains(const Point& x) const {
  if (!base.contains(x)) return false;
  for (const auto& c : extra)
    if (!c.satisfied(x)) return false;
  return !soc || soc->satisfied(x);
}

Integer bounding_radius(const Polytope& p, std::span<const AffineForm> forms) {
  Integer radius = 1;
  const auto& box = p.bounds();
  for (const auto& f : forms) {
    Integer r;
    if (!box) {
      r = abs(f.offset);
    } else {
      Rational lo(f.offset), hi(f.offset);
      for (std::size_t i = 0; i < p.dim(); ++i) {
        Rational a = f.coeffs[i] * *(*box)[i].lo;
        Rational b = f.coeffs[i] * *(*box)[i].hi;
        lo += std::min(a, b);
        hi += std::max(a, b);
      }
      r = ceil(std::max(abs(lo), abs(hi)));
    }
    if (r > radius) radius = r;
  }
  return radius;
}

namespace {

// a . x <= bound over the integers.
struct IntInequality {
  std::vector<Integer> a;
  Integer bound;
};

void push_tightened(std::vector<IntInequality>& out, const std::vector<Integer>& a, const Rational& rhs,
                    Relation rel) {
  if (rel != Relation::ge) out.push_back({a, floor(rhs)});
  if (rel != Relation::le) {
    std::vector<Integer> neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    out.push_back({std::move(neg), floor(Rational(-rhs))});
  }
}

class LatticeWalker {
 public:
  LatticeWalker(std::vector<IntInequality> rows, std::vector<Integer> lo, std::vector<Integer> hi,
                const std::optional<SocConstraint>& soc)
      : rows_(std::move(rows)), lo_(std::move(lo)), hi_(std::move(hi)), soc_(soc), n_(lo_.size()) {
    // rest_[r][i]: smallest value of sum_{j >= i} a_j x_j over the box
    rest_.assign(rows_.size(), std::vector<Integer>(n_ + 1));
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t i = n_; i-- > 0;) {
        const Integer& a = rows_[r].a[i];
        rest_[r][i] = rest_[r][i + 1] + (a > 0 ? Integer(a * lo_[i]) : Integer(a * hi_[i]));
      }
    partial_.assign(rows_.size(), Integer(0));
    x_.assign(n_, Integer(0));
  }

  void run(std::vector<Point>& out, bool first_only) {
    out_ = &out;
    first_only_ = first_only;
    descend(0);
  }

 private:
  bool descend(std::size_t i) {
    if (i == n_) {
      if (soc_ && !soc_->satisfied(x_)) return false;
      out_->push_back(x_);
      return first_only_;
    }
    Integer lb = lo_[i], ub = hi_[i];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Integer& a = rows_[r].a[i];
      Integer slack = rows_[r].bound - partial_[r] - rest_[r][i + 1];
      if (a == 0) {
        if (slack < 0) return false;
      } else if (a > 0) {
        Integer t;
        mpz_fdiv_q(t.get_mpz_t(), slack.get_mpz_t(), a.get_mpz_t());
        if (t < ub) ub = t;
      } else {
        Integer t;
        mpz_cdiv_q(t.get_mpz_t(), slack.get_mpz_t(), a.get_mpz_t());
        if (t > lb) lb = t;
      }
    }
    for (Integer v = lb; v <= ub; ++v) {
      x_[i] = v;
      for (std::size_t r = 0; r < rows_.size(); ++r) partial_[r] += rows_[r].a[i] * v;
      bool stop = descend(i + 1);
      for (std::size_t r = 0; r < rows_.size(); ++r) partial_[r] -= rows_[r].a[i] * v;
      if (stop) return true;
    }
    return false;
  }

  std::vector<IntInequality> rows_;
  std::vector<Integer> lo_, hi_;
  const std::optional<SocConstraint>& soc_;
  std::size_t n_;
  std::vector<std::vector<Integer>> rest_;
  std::vector<Integer> partial_;
  Point x_;
  std::vector<Point>* out_ = nullptr;
  bool first_only_ = false;
};

std::vector<Point> walk(const Region& region, const EnumerationOptions& opts, bool first_only) {
  const Polytope& p = region.base;
  const std::size_t n = p.dim();
  if (!p.bounds()) return {};

  std::vector<IntInequality> rows;
  for (std::size_t r = 0; r < p.a().rows(); ++r) {
    std::vector<Integer> a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = p.a()(r, j);
    rows.push_back({std::move(a), p.b()[r]});
  }
  for (const auto& c : region.extra) {
    if (c.coeffs.size() != n) throw std::invalid_argument("constraint dimension mismatch");
    push_tightened(rows, c.coeffs, c.rhs, c.rel);
  }

  std::vector<Halfspace> sys;
  for (const auto& row : rows) {
    Halfspace h{std::vector<Rational>(n), Rational(row.bound)};
    for (std::size_t j = 0; j < n; ++j) h.a[j] = Rational(row.a[j]);
    sys.push_back(std::move(h));
  }
  auto box = coordinate_bounds(sys, n);
  if (!box) return {};

  std::vector<Integer> lo(n), hi(n);
  Integer cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = ceil(*(*box)[i].lo);
    hi[i] = floor(*(*box)[i].hi);
    if (lo[i] > hi[i]) return {};
    cells *= hi[i] - lo[i] + 1;
  }
  if (cells > Integer(std::to_string(opts.budget)))
    throw BudgetExceeded("enumeration box has " + to_string(cells) + " cells, budget is " +
                         std::to_string(opts.budget));

  std::vector<Point> out;
  LatticeWalker(std::move(rows), std::move(lo), std::move(hi), region.soc).run(out, first_only);
  return out;
}

}  // namespace

std::vector<Point> enumerate_integer_points(const Region& region, const EnumerationOptions& opts) {
  return walk(region, opts, false);
}

std::optional<Point> feasible_point(const Region& region, const EnumerationOptions& opts) {
  auto pts = walk(region, opts, true);
  if (pts.empty()) return std::nullopt;
  return pts.front();
}

bool in_convex_hull(std::span<const Point> points, const Point& target) {
  if (points.empty()) return false;
  const std::size_t n = target.size();
  const std::size_t k = points.size();
  const std::size_t m = n + 1;
  const std::size_t width = k + m + 1;  // lambdas, artificials, rhs

  // rows: sum_i lambda_i u_i = target, sum_i lambda_i = 1
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < k; ++i) t[r][i] = r < n ? Rational(points[i][r]) : Rational(1);
    t[r][width - 1] = r < n ? Rational(target[r]) : Rational(1);
    if (t[r][width - 1] < 0) {  // artificials need a nonnegative rhs
      for (std::size_t i = 0; i < k; ++i) t[r][i] = -t[r][i];
      t[r][width - 1] = -t[r][width - 1];
    }
    t[r][k + r] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = k + r;

  // phase-1 reduced costs: minimize the sum of artificials
  std::vector<Rational> z(width);
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= k && j < k + m) continue;
    for (std::size_t r = 0; r < m; ++r) z[j] -= t[r][j];
  }

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][width - 1] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase 1
    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rational f = t[r][enter];
      for (std::size_t j = 0; j < width; ++j) t[r][j] -= f * t[leave][j];
    }
    Rational f = z[enter];
    for (std::size_t j = 0; j < width; ++j) z[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return z[width - 1] == 0;
}

std::vector<Point> convex_hull_vertices(std::span<const Point> points) {
  std::set<Point> unique(points.begin(), points.end());
  if (unique.size() <= 1) return {unique.begin(), unique.end()};
  const std::size_t n = unique.begin()->size();

  // Directions in {-1,0,1}^n with positive leading entry.
  std::vector<std::vector<int>> dirs;
  std::vector<int> d(n, -1);
  while (true) {
    auto lead = std::find_if(d.begin(), d.end(), [](int v) { return v != 0; });
    if (lead != d.end() && *lead > 0) dirs.push_back(d);
    std::size_t i = 0;
    while (i < n && d[i] == 1) d[i++] = -1;
    if (i == n) break;
    ++d[i];
  }

  // A point that is the midpoint of two others is never a vertex.
  std::vector<Point> candidates;
  for (const auto& x : unique) {
    bool midpoint = false;
    for (const auto& dir : dirs) {
      Point a = x, b = x;
      for (std::size_t i = 0; i < n; ++i) {
        a[i] += dir[i];
        b[i] -= dir[i];
      }
      if (unique.count(a) && unique.count(b)) {
        midpoint = true;
        break;
      }
    }
    if (!midpoint) candidates.push_back(x);
  }

  std::vector<Point> vertices;
  std::vector<Point> others;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < candidates.size(); ++j)
      if (j != i) others.push_back(candidates[j]);
    if (!in_convex_hull(others, candidates[i])) vertices.push_back(candidates[i]);
  }
  return vertices;
}

std::vector<Point> integer_hull_vertices(const Polytope& p, const std::vector<LinearConstraint>& extra,
                                         const EnumerationOptions& opts) {
  auto pts = enumerate_integer_points(Region{p, extra, std::nullopt}, opts);
  return convex_hull_vertices(pts);
}

}  // namespace sliceopt
