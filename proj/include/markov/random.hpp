#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "markov/kernel.hpp"

namespace markov {

using Rng = std::mt19937_64;

struct RandomOptions {
  /// Integer weights are drawn from 1..max_weight before normalization.
  int max_weight = 4;
  /// Chance that an individual entry is forced to zero (Stoch/Multi).
  double zero_probability = 0.35;
};

/// A valid column of the given kind on `n` elements (n >= 1).
std::vector<Rational> random_column(Kind kind, std::size_t n, Rng& rng,
                                    const RandomOptions& opts = {});

Kernel random_kernel(Kind kind, const FinObject& dom, const FinObject& cod, Rng& rng,
                     const RandomOptions& opts = {});

/// Object with a uniformly drawn size in [min_size, max_size].
FinObject random_object(Rng& rng, std::size_t min_size, std::size_t max_size,
                        std::string_view prefix = "x");

/// A stochastic idempotent e = ι∘π assembled from a random class
/// structure: X is partitioned into recurrent classes plus a transient set;
/// each class carries a full-support distribution, and each transient state
/// mixes randomly over the classes.
struct GeneratedIdempotent {
  Kernel e;
  Kernel iota;
  Kernel pi;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> transient;
};

GeneratedIdempotent random_idempotent(const FinObject& x, Rng& rng,
                                      const RandomOptions& opts = {});

}  // namespace markov
