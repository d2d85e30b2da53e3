#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "inflatable/permutation.hpp"

namespace inflatable {

inline constexpr std::string_view kGeneratorId =
    "mt19937_64;seed=splitmix64(seed,sample);bounded=rejection";
inline constexpr std::size_t kMaxEstimatedPatternLength = 4;

struct MonteCarloConfig {
  std::size_t j = 1000;              // length of the random inflating permutation
  std::uint64_t samples = 50;
  std::uint64_t subset_samples = 0;  // 0 = exact counting
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::size_t j = 0;
  std::uint64_t seed = 0;
};

/// Empirical density of `pi` in inflate(tau, lambda) for `samples` uniform
/// random lambda of length j. Each sample draws from its own generator seeded
/// by (seed, sample index), so results do not depend on thread count.
Estimate estimate_limit_density(const Permutation& tau, const Permutation& pi,
                                const MonteCarloConfig& config);

// Exact counting is limited to inflations of at most this length.
std::size_t max_exact_length(std::size_t pattern_length);

/// Generator for sample `index` of a run seeded with `seed`.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index);

  // Uniform on [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Fisher-Yates shuffle of the identity.
Permutation random_permutation(std::size_t n, SampleRng& rng);

}  // namespace inflatable
