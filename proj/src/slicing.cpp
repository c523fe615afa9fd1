#include "sliceopt/slicing.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace sliceopt {

std::string to_string(const SliceKey& key) {
  std::string out = "[";
  for (std::size_t i = 0; i < key.k.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(key.k[i]);
  }
  return out + "]";
}

LevelScale::LevelScale(Rational ratio) : ratio_(std::move(ratio)) {
  if (ratio_ <= 1) throw std::domain_error("slice ratio must exceed 1");
  powers_.emplace_back(Integer(1), Integer(1));
}

const std::pair<Integer, Integer>& LevelScale::powers(long long k) const {
  while (static_cast<long long>(powers_.size()) <= k) {
    const auto& last = powers_.back();
    powers_.emplace_back(last.first * ratio_.get_num(), last.second * ratio_.get_den());
  }
  return powers_[static_cast<std::size_t>(k)];
}

bool LevelScale::within(const Integer& magnitude, long long k) const {
  const auto& [num, den] = powers(k);
  return magnitude * den <= num;
}

Rational LevelScale::power(long long k) const {
  if (k < 0) throw std::domain_error("negative ratio exponent");
  const auto& [num, den] = powers(k);
  return make_rational(num, den);
}

static double log_of(const Integer& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

long long LevelScale::index(const Integer& value) const {
  if (value == 0) return 0;
  Integer m = abs(value);
  long long k = 1;
  if (!within(m, 1)) {
    double est = log_of(m) / (log_of(ratio_.get_num()) - log_of(ratio_.get_den()));
    k = std::max(1LL, static_cast<long long>(std::ceil(est)));
    while (k > 1 && within(m, k - 1)) --k;
    while (!within(m, k)) ++k;
  }
  return value > 0 ? k : -k;
}

std::vector<long long> LevelScale::admissible(const Integer& value) const {
  long long k = index(value);
  if (k == 0) return {0};
  long long mag = k > 0 ? k : -k;
  const auto& [num, den] = powers(mag);
  std::vector<long long> out{k};
  if (abs(value) * den == num) out.push_back(k > 0 ? k + 1 : k - 1);
  return out;
}

Integer LevelScale::band_top(long long k) const {
  if (k == 0) return 0;
  if (k > 0) return floor(power(k));
  return floor(Rational(-power(-k - 1)));
}

long long level_index(const Integer& value, const Rational& ratio) { return LevelScale(ratio).index(value); }

SliceKey canonical_key(const Point& x, const SliceParams& params) {
  LevelScale scale(params.ratio);
  SliceKey key;
  key.k.reserve(params.forms.size());
  for (const auto& f : params.forms) key.k.push_back(scale.index(f(x)));
  return key;
}

static bool in_band(const Integer& value, long long k, const LevelScale& scale) {
  if (k == 0) return value == 0;
  long long mag = k > 0 ? k : -k;
  Rational v = k > 0 ? Rational(value) : Rational(-value);
  return scale.power(mag - 1) <= v && v <= scale.power(mag);
}

bool in_slice(const Point& x, const SliceKey& key, const SliceParams& params) {
  LevelScale scale(params.ratio);
  for (std::size_t j = 0; j < params.forms.size(); ++j)
    if (!in_band(params.forms[j](x), key.k[j], scale)) return false;
  return true;
}

std::vector<LinearConstraint> slice_constraints(const SliceKey& key, const SliceParams& params) {
  if (key.k.size() != params.forms.size()) throw std::invalid_argument("slice key length mismatch");
  LevelScale scale(params.ratio);
  std::vector<LinearConstraint> out;
  for (std::size_t j = 0; j < params.forms.size(); ++j) {
    const auto& f = params.forms[j];
    long long k = key.k[j];
    Rational shift(f.offset);
    if (k == 0) {
      out.push_back({f.coeffs, Rational(-shift), Relation::eq});
      continue;
    }
    long long mag = k > 0 ? k : -k;
    Rational inner = scale.power(mag - 1), outer = scale.power(mag);
    if (k > 0) {
      out.push_back({f.coeffs, Rational(inner - shift), Relation::ge});
      out.push_back({f.coeffs, Rational(outer - shift), Relation::le});
    } else {
      out.push_back({f.coeffs, Rational(-outer - shift), Relation::ge});
      out.push_back({f.coeffs, Rational(-inner - shift), Relation::le});
    }
  }
  return out;
}

long long level_cap(const Integer& R, const Rational& ratio) {
  if (R < 1) throw std::domain_error("level_cap requires R >= 1");
  if (R == 1) return 0;
  return LevelScale(ratio).index(R);
}

namespace {

void check_cap(const SliceKey& key, long long cap) {
  for (long long k : key.k)
    if (k > cap || k < -cap) throw std::logic_error("slice key " + to_string(key) + " exceeds level cap");
}

std::vector<Cell> cover_by_points(const Polytope& p, const SliceParams& params, long long cap,
                                  const CoverOptions& opts) {
  LevelScale scale(params.ratio);
  std::vector<Point> points = enumerate_integer_points(Region{p, {}, std::nullopt}, opts.enumeration);
  if (opts.ground) std::erase_if(points, [&](const Point& x) { return !opts.ground(x); });

  std::map<SliceKey, Cell> cells;
  std::vector<std::vector<std::vector<long long>>> choices(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    SliceKey key;
    for (const auto& f : params.forms) {
      choices[i].push_back(scale.admissible(f(points[i])));
      key.k.push_back(choices[i].back().front());
    }
    check_cap(key, cap);
    cells.try_emplace(key, Cell{key, {}, {}});
  }

  // A point on a band boundary belongs to every slice its values admit.
  const std::size_t l = params.forms.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<std::size_t> pick(l, 0);
    while (true) {
      SliceKey key;
      for (std::size_t j = 0; j < l; ++j) key.k.push_back(choices[i][j][pick[j]]);
      if (auto it = cells.find(key); it != cells.end()) it->second.members.push_back(points[i]);
      std::size_t j = 0;
      while (j < l && ++pick[j] == choices[i][j].size()) pick[j++] = 0;
      if (j == l) break;
    }
  }

  std::vector<Cell> out;
  out.reserve(cells.size());
  for (auto& [key, cell] : cells) {
    cell.representative = cell.members.front();
    out.push_back(std::move(cell));
  }
  return out;
}

struct ArrangementWalk {
  const Polytope& p;
  const SliceParams& params;
  long long cap;
  const CoverOptions& opts;
  LevelScale scale;
  std::vector<Cell> out;

  void descend(std::vector<Halfspace>& sys, SliceKey& key) {
    const std::size_t j = key.k.size();
    if (j == params.forms.size()) {
      Region region{p, slice_constraints(key, params), std::nullopt};
      auto members = enumerate_integer_points(region, opts.enumeration);
      if (opts.ground) std::erase_if(members, [&](const Point& x) { return !opts.ground(x); });
      if (!members.empty()) {
        Point rep = members.front();
        out.push_back(Cell{key, std::move(rep), std::move(members)});
      }
      return;
    }
    const auto& f = params.forms[j];
    std::vector<Rational> objective(f.coeffs.begin(), f.coeffs.end());
    Range range = linear_range(sys, objective);
    if (range.empty) return;
    Integer lo = ceil(*range.lo + f.offset);
    Integer hi = floor(*range.hi + f.offset);

    std::set<long long> bands;
    for (Integer v = lo; v <= hi;) {
      for (long long k : scale.admissible(v)) bands.insert(k);
      v = scale.band_top(scale.index(v)) + 1;
    }
    for (long long k : bands) {
      if (k > cap || k < -cap) throw std::logic_error("arrangement band exceeds level cap");
      key.k.push_back(k);
      SliceKey single{{k}};
      SliceParams one{{f}, params.ratio};
      std::size_t before = sys.size();
      for (const auto& c : slice_constraints(single, one)) {
        Halfspace h{objective, c.rhs};
        if (c.rel != Relation::le) {  // ge or eq: add the reversed side
          Halfspace g{objective, Rational(-c.rhs)};
          for (auto& v : g.a) v = -v;
          sys.push_back(std::move(g));
        }
        if (c.rel != Relation::ge) sys.push_back(std::move(h));
      }
      descend(sys, key);
      sys.resize(before);
      key.k.pop_back();
    }
  }
};

}  // namespace

std::vector<Cell> cover(const Polytope& p, const SliceParams& params, long long cap, const CoverOptions& opts) {
  if (opts.strategy == CoverStrategy::points) return cover_by_points(p, params, cap, opts);
  ArrangementWalk walk{p, params, cap, opts, LevelScale(params.ratio), {}};
  std::vector<Halfspace> sys = p.halfspaces();
  SliceKey key;
  if (p.bounds()) walk.descend(sys, key);
  return std::move(walk.out);
}

}  // namespace sliceopt
