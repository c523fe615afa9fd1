#include "sliceopt/exact.hpp"

#include <algorithm>

namespace sliceopt {

namespace {

struct Scored {
  Point x;
  Integer f;
};

// Least integer level beta in [lo, hi] such that some point has f <= beta,
// found by bisection; points above a feasible level are dropped as it goes.
std::optional<std::pair<Point, Integer>> level_search(std::vector<Scored> cand, Integer lo, Integer hi) {
  std::erase_if(cand, [&](const Scored& s) { return s.f > hi; });
  if (cand.empty()) return std::nullopt;
  --lo;  // infeasible
  std::vector<Scored> feasible;
  while (hi - lo > 1) {
    Integer mid = lo + (hi - lo) / 2;
    feasible.clear();
    for (const auto& c : cand)
      if (c.f <= mid) feasible.push_back(c);
    if (feasible.empty()) {
      lo = mid;
    } else {
      hi = mid;
      cand.swap(feasible);
    }
  }
  const Scored* best = nullptr;
  for (const auto& c : cand)
    if (c.f == hi && (!best || c.x < best->x)) best = &c;
  return std::make_pair(best->x, best->f);
}

std::vector<Scored> scored(const SymMatrix& q, const std::vector<Point>& pts) {
  std::vector<Scored> out;
  out.reserve(pts.size());
  for (const auto& x : pts) out.push_back({x, eval_f(q, x)});
  return out;
}

std::optional<std::pair<Point, Integer>> best_vertex(const SymMatrix& q, const std::vector<Point>& vertices) {
  std::optional<std::pair<Point, Integer>> best;
  for (const auto& v : vertices) {
    Integer f = eval_f(q, v);
    if (!best || f < best->second || (f == best->second && v < best->first)) best.emplace(v, f);
  }
  return best;
}

SolveReport exact_report(std::optional<std::pair<Point, Integer>> best, std::string mode) {
  SolveReport r;
  r.mode = std::move(mode);
  r.exact = true;
  r.epsilon = 0;
  if (best) {
    r.status = SolveStatus::solved;
    r.x = std::move(best->first);
    r.value = Rational(best->second);
  }
  return r;
}

LinearConstraint half(const QuadFormInstance& inst, int sign) {
  std::vector<Integer> a = inst.dec.form(inst.dim() - 1);
  for (auto& v : a) v *= sign;
  return LinearConstraint{std::move(a), Rational(0), Relation::ge};
}

}  // namespace

Integer objective_bound(const SymMatrix& q, const Polytope& p) {
  if (!p.bounds()) return 0;
  std::vector<Integer> m(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto& r = (*p.bounds())[i];
    m[i] = ceil(std::max(abs(*r.lo), abs(*r.hi)));
  }
  Integer b = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) b += abs(q(i, j)) * m[i] * m[j];
  return b;
}

std::optional<std::pair<Point, Integer>> quasiconvex_min_region(const QuadFormInstance& inst, int halfspace_sign,
                                                                const EnumerationOptions& opts) {
  if (inst.which != QuadCase::one_negative) throw std::invalid_argument("quasiconvex_min_region needs one negative eigenvalue");
  if (halfspace_sign != 1 && halfspace_sign != -1) throw std::invalid_argument("halfspace sign must be +1 or -1");

  const std::size_t last = inst.dim() - 1;
  SocConstraint cone;
  for (std::size_t i = 0; i < last; ++i) {
    cone.d.push_back(inst.dec.d[i]);
    cone.forms.push_back(inst.dec.form(i));
  }
  cone.weight = inst.axis_weight();
  cone.axis = inst.dec.form(last);
  for (auto& v : cone.axis) v *= halfspace_sign;
  cone.beta = 0;

  Region region{inst.p, {half(inst, halfspace_sign)}, cone};
  auto pts = enumerate_integer_points(region, opts);
  return level_search(scored(inst.q, pts), -objective_bound(inst.q, inst.p), 0);
}

SolveReport convex_exact(const SymMatrix& q, const Polytope& p, const EnumerationOptions& opts) {
  auto pts = enumerate_integer_points(Region{p, {}, std::nullopt}, opts);
  Integer b = objective_bound(q, p);
  return exact_report(level_search(scored(q, pts), -b, b), "convex-exact");
}

SolveReport concave_exact(const SymMatrix& q, const Polytope& p, const EnumerationOptions& opts) {
  return exact_report(best_vertex(q, integer_hull_vertices(p, {}, opts)), "concave-exact");
}

std::optional<SolveReport> exact_solve(const SymMatrix& q, const Polytope& p, const EnumerationOptions& opts) {
  Inertia in = inertia(q);
  if (in.negative != 1 && in.positive != 1)
    throw UnsupportedInertia("exact solve needs exactly one negative or exactly one positive eigenvalue");
  if (!feasible_point(Region{p, {}, std::nullopt}, opts)) return exact_report(std::nullopt, "exact");

  if (in.negative == 1) {
    auto inst = make_quadform_instance(q, p, QuadCase::one_negative);
    auto a = quasiconvex_min_region(inst, 1, opts);
    auto b = quasiconvex_min_region(inst, -1, opts);
    if (a || b) {
      auto best = !b || (a && (a->second < b->second || (a->second == b->second && a->first < b->first))) ? a : b;
      return exact_report(best, "exact-one-negative");
    }
  }
  if (in.positive == 1) {
    // On each half the set {f >= 0} is a convex cone on which f is
    // quasi-concave, so f >= 0 on the hull vertices certifies f >= 0 on P ∩ Z^n.
    auto inst = make_quadform_instance(q, p, QuadCase::one_positive);
    std::vector<Point> vertices;
    for (int sign : {1, -1}) {
      auto v = integer_hull_vertices(p, {half(inst, sign)}, opts);
      vertices.insert(vertices.end(), v.begin(), v.end());
    }
    auto best = best_vertex(q, vertices);
    if (best && best->second >= 0) return exact_report(best, "exact-one-positive");
  }
  return std::nullopt;
}

SolveReport solve_dim3(const SymMatrix& q, const Polytope& p, const Rational& eps, const DriverOptions& opts) {
  if (q.size() != 3) throw std::invalid_argument("solve_dim3 needs a 3x3 matrix");
  Inertia in = inertia(q);
  if (in.negative == 0) return convex_exact(q, p, opts.cover.enumeration);
  if (in.positive == 0) return concave_exact(q, p, opts.cover.enumeration);
  if (auto r = exact_solve(q, p, opts.cover.enumeration)) return *r;
  return fptas_quadform(q, p, eps, opts);
}

}  // namespace sliceopt
