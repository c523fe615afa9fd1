#include "sliceopt/quadform.hpp"

#include <algorithm>

#include "sliceopt/exact.hpp"

namespace sliceopt {

namespace {

Integer form_value(const QuadFormInstance& inst, std::size_t i, const Point& x) {
  Integer v = 0;
  for (std::size_t r = 0; r < x.size(); ++r) v += inst.dec.s(r, i) * x[r];
  return v;
}

std::vector<AffineForm> decomposition_forms(const Decomposition& dec) {
  std::vector<AffineForm> out;
  for (std::size_t i = 0; i < dec.size(); ++i) out.push_back(AffineForm{dec.form(i), 0});
  return out;
}

}  // namespace

QuadFormInstance make_quadform_instance(const SymMatrix& q, const Polytope& p, QuadCase which) {
  if (p.dim() != q.size()) throw std::invalid_argument("Q and P dimensions differ");
  Inertia in = inertia(q);
  const SymMatrix work = which == QuadCase::one_negative ? q : q.negated();
  const int negatives = which == QuadCase::one_negative ? in.negative : in.positive;
  if (negatives != 1)
    throw UnsupportedInertia(std::string("expected exactly one ") +
                             (which == QuadCase::one_negative ? "negative" : "positive") + " eigenvalue");

  Decomposition dec = reorder_for_one_negative(decompose(work));
  Integer radius = 1;
  for (const auto& d : dec.d) radius = std::max(radius, abs(d));
  auto forms = decomposition_forms(dec);
  radius = std::max(radius, bounding_radius(p, forms));
  return QuadFormInstance{q, which, std::move(dec), in, p, radius};
}

Integer eval_f(const IntMatrix& q, const Point& x) {
  Integer v = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < x.size(); ++j) row += q(i, j) * x[j];
    v += x[i] * row;
  }
  return v;
}

Integer eval_f(const SymMatrix& q, const Point& x) { return eval_f(q.entries(), x); }

Integer g_radicand(const QuadFormInstance& inst, const Point& x) {
  Integer sum = 0;
  for (std::size_t i = 0; i + 1 < inst.dec.size(); ++i) {
    Integer v = form_value(inst, i, x);
    sum += inst.dec.d[i] * v * v;
  }
  return inst.axis_weight() * sum;
}

Surd eval_g_scaled(const QuadFormInstance& inst, const Point& x) {
  return Surd(g_radicand(inst, x), -inst.axis_weight() * abs(form_value(inst, inst.dim() - 1, x)));
}

Surd eval_s_scaled(const QuadFormInstance& inst, const Point& x) {
  return Surd(g_radicand(inst, x), inst.axis_weight() * abs(form_value(inst, inst.dim() - 1, x)));
}

SliceableSpec sliceable_spec_for_s(const QuadFormInstance& inst) {
  return SliceableSpec{decomposition_forms(inst.dec), 1,
                       [inst](const Point& x) -> Value { return eval_s_scaled(inst, x); }};
}

Rational bisection_precision(const QuadFormInstance& inst) {
  Integer n(static_cast<unsigned long>(inst.dim()));
  return make_rational(1, 240 * pow(n, 4) * pow(inst.radius, 16));
}

std::optional<std::pair<Point, Surd>> min_g(const QuadFormInstance& inst, std::span<const Point> points) {
  if (points.empty()) return std::nullopt;
  const std::size_t last = inst.dim() - 1;
  const Integer n(static_cast<unsigned long>(inst.dim()));
  const Rational bound(2 * n * pow(inst.radius, 3));
  const Rational mu = bisection_precision(inst);

  struct Candidate {
    const Point* x;
    Integer radicand;
    Integer axis_term;  // |d_n| * sign * L_n(x) >= 0
  };

  std::optional<std::pair<Point, Surd>> best;
  for (int sign : {1, -1}) {
    std::vector<Candidate> cand;
    for (const auto& x : points) {
      Integer axis = sign * form_value(inst, last, x);
      if (axis < 0) continue;
      cand.push_back({&x, g_radicand(inst, x), inst.axis_weight() * axis});
    }
    if (cand.empty()) continue;

    // Invariant: every candidate has g > lo, and some candidate has g <= hi.
    Rational lo = -bound - 1, hi = bound;
    std::vector<Candidate> feasible;
    while (cand.size() > 1 && hi - lo >= mu) {
      Rational mid = (lo + hi) / 2;
      feasible.clear();
      for (const auto& c : cand)
        if (soc_holds(c.radicand, c.axis_term, mid)) feasible.push_back(c);
      if (feasible.empty()) {
        lo = mid;
      } else {
        hi = mid;
        cand.swap(feasible);
      }
    }
    const Candidate& pick =
        *std::min_element(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) { return *a.x < *b.x; });
    Surd value = eval_g_scaled(inst, *pick.x);
    if (!best || better_candidate(value, *pick.x, best->second, best->first)) best.emplace(*pick.x, value);
  }
  return best;
}

std::optional<std::pair<Point, Surd>> min_g(const QuadFormInstance& inst, const Region& region,
                                            const EnumerationOptions& opts) {
  auto pts = enumerate_integer_points(region, opts);
  return min_g(inst, pts);
}

std::optional<std::pair<Point, Integer>> min_neg_g(const QuadFormInstance& inst, std::span<const Point> points) {
  std::optional<std::pair<Point, Integer>> best;
  for (const auto& v : convex_hull_vertices(points)) {
    Integer f = eval_f(inst.q, v);
    if (!best || f < best->second) best.emplace(v, f);
  }
  return best;
}

std::optional<std::pair<Point, Integer>> min_neg_g(const QuadFormInstance& inst, const Region& region,
                                                   const EnumerationOptions& opts) {
  auto pts = enumerate_integer_points(region, opts);
  return min_neg_g(inst, pts);
}

std::strong_ordering approx_compare_g(const QuadFormInstance& inst, const Point& x, const Point& y) {
  const Rational mu = bisection_precision(inst);
  Rational a = surd_value_approx(eval_g_scaled(inst, x), mu / 4);
  Rational b = surd_value_approx(eval_g_scaled(inst, y), mu / 4);
  if (abs(Rational(a - b)) < mu / 2) return std::strong_ordering::equal;
  return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
}

SolveReport fptas_quadform(const SymMatrix& q, const Polytope& p, const Rational& eps, const DriverOptions& opts) {
  Inertia in = inertia(q);
  if (in.negative == 0) return convex_exact(q, p, opts.cover.enumeration);
  if (in.positive == 0) return concave_exact(q, p, opts.cover.enumeration);
  if (in.negative != 1 && in.positive != 1)
    throw UnsupportedInertia("inertia (" + std::to_string(in.positive) + "," + std::to_string(in.negative) + "," +
                             std::to_string(in.zero) + ") has at least two positive and two negative eigenvalues");

  const QuadCase which = in.negative == 1 ? QuadCase::one_negative : QuadCase::one_positive;
  const QuadFormInstance inst = make_quadform_instance(q, p, which);

  BasicSolver solver;
  solver.terms = 1;
  if (which == QuadCase::one_negative) {
    solver.evaluate = [&inst](std::size_t, const Point& x) -> Value { return eval_g_scaled(inst, x); };
    solver.minimize = [&inst](const CellView& cell, const std::vector<Value>&, const Rational&) -> std::optional<Point> {
      auto r = min_g(inst, cell.members);
      if (!r) return std::nullopt;
      return r->first;
    };
  } else {
    // -g is not of the form sqrt(p) + q, so no evaluator; cells compare f directly.
    solver.minimize = [&inst](const CellView& cell, const std::vector<Value>&, const Rational&) -> std::optional<Point> {
      auto r = min_neg_g(inst, cell.members);
      if (!r) return std::nullopt;
      return r->first;
    };
  }
  Evaluator f = [&q](const Point& x) -> Value { return Rational(eval_f(q, x)); };

  SolveReport report = approx_minimize_product(p, solver, sliceable_spec_for_s(inst), f, eps, opts);
  report.mode = which == QuadCase::one_negative ? "fptas-one-negative" : "fptas-one-positive";
  if (report.status == SolveStatus::solved) report.surrogate = eval_g_scaled(inst, report.x);
  return report;
}

}  // namespace sliceopt
