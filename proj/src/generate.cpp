#include "sliceopt/generate.hpp"

#include <limits>
#include <stdexcept>

namespace sliceopt {

long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long long>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return static_cast<long long>(static_cast<std::uint64_t>(lo) + r % span);
}

bool inertia_matches(const Inertia& in, const GenerateOptions& opts) {
  switch (opts.filter) {
    case InertiaFilter::any:
      return true;
    case InertiaFilter::one_negative:
      return in.negative == 1;
    case InertiaFilter::one_positive:
      return in.positive == 1;
    case InertiaFilter::exact:
      return in == opts.inertia;
  }
  return false;
}

InstanceFile generate_instance(const GenerateOptions& opts) {
  if (opts.n == 0 || opts.n > 4) throw std::invalid_argument("generate supports 1 <= n <= 4");
  if (opts.coefficient_bound < 0 || opts.box_bound < 0) throw std::invalid_argument("bounds must be nonnegative");
  std::mt19937_64 rng(opts.seed);
  const std::size_t n = opts.n;
  for (unsigned attempt = 0; attempt < opts.retries; ++attempt) {
    IntMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        q(i, j) = static_cast<long>(uniform_int(rng, -opts.coefficient_bound, opts.coefficient_bound));
        q(j, i) = q(i, j);
      }
    if (!inertia_matches(inertia(SymMatrix(q)), opts)) continue;

    std::vector<Integer> lo(n, Integer(-opts.box_bound)), hi(n, Integer(opts.box_bound));
    Polytope box = Polytope::box(lo, hi);
    return InstanceFile{n, Objective::quadform, q, box.a(), box.b(), opts.epsilon};
  }
  throw std::runtime_error("no matrix with the requested inertia after " + std::to_string(opts.retries) + " draws");
}

}  // namespace sliceopt
