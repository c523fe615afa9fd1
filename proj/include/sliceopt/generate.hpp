#pragma once

// Reproducible random instances: symmetric Q with entries in [-bound, bound]
// drawn until its inertia passes the filter, over the box [-box, box]^n.

#include <cstdint>
#include <optional>
#include <random>

#include "sliceopt/instance.hpp"
#include "sliceopt/linalg.hpp"

namespace sliceopt {

enum class InertiaFilter { any, one_negative, one_positive, exact };

struct GenerateOptions {
  std::uint64_t seed = 1;
  std::size_t n = 2;
  InertiaFilter filter = InertiaFilter::any;
  Inertia inertia;  // used when filter == exact
  long coefficient_bound = 10;
  long box_bound = 6;
  std::optional<Rational> epsilon;
  unsigned retries = 10000;
};

/// Uniform integer in [lo, hi] by rejection sampling, identical on every
/// platform for a given engine state.
long long uniform_int(std::mt19937_64& rng, long long lo, long long hi);

bool inertia_matches(const Inertia& in, const GenerateOptions& opts);

/// Throws std::invalid_argument for n == 0 or n > 4 and std::runtime_error
/// when no matrix passes the filter within the retry budget.
InstanceFile generate_instance(const GenerateOptions& opts);

}  // namespace sliceopt
