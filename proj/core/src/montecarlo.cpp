#include "inflatable/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "inflatable/counting.hpp"
#include "inflatable/error.hpp"

namespace inflatable {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Exact density for one inflation, via the fast length-3 counter where it
// applies.
double exact_density(const Permutation& pi, const Permutation& text) {
  const auto total = static_cast<double>(binomial_u64(text.size(), pi.size()));
  if (pi.size() == 1) return 1.0;
  if (pi.size() <= 3 && text.size() >= 3) {
    return static_cast<double>(count_length3_all(text).count(pi)) / total;
  }
  return static_cast<double>(count_occurrences(pi, text)) / total;
}

double sampled_density(const Permutation& pi, const Permutation& text,
                       std::uint64_t subsets, SampleRng& rng) {
  const std::size_t k = pi.size();
  const std::size_t n = text.size();
  std::vector<std::size_t> idx(k);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    // k distinct indices by rejection; k <= 4 is tiny next to n.
    for (std::size_t a = 0; a < k; ++a) {
      bool fresh;
      do {
        idx[a] = static_cast<std::size_t>(rng.below(n));
        fresh = std::find(idx.begin(), idx.begin() + a, idx[a]) == idx.begin() + a;
      } while (!fresh);
    }
    std::sort(idx.begin(), idx.end());
    bool match = true;
    for (std::size_t a = 0; a < k && match; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if ((text[idx[a]] < text[idx[b]]) != (pi[a] < pi[b])) {
          match = false;
          break;
        }
      }
    }
    hits += match;
  }
  return static_cast<double>(hits) / static_cast<double>(subsets);
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index)
    : engine_(splitmix64(splitmix64(seed) ^ index)) {}

std::uint64_t SampleRng::below(std::uint64_t bound) {
  // Reject the tail above the largest multiple of bound.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Permutation random_permutation(std::size_t n, SampleRng& rng) {
  std::vector<int> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<int>(i + 1);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(values[i - 1], values[rng.below(i)]);
  }
  return Permutation(std::move(values));
}

std::size_t max_exact_length(std::size_t pattern_length) {
  return pattern_length <= 3 ? 500 : 60;
}

Estimate estimate_limit_density(const Permutation& tau, const Permutation& pi,
                                const MonteCarloConfig& config) {
  if (pi.size() > kMaxEstimatedPatternLength) {
    throw PreconditionError("Monte Carlo estimates support patterns of length <= 4");
  }
  if (config.j < pi.size()) {
    throw PreconditionError("j = " + std::to_string(config.j) +
                            " is shorter than the pattern");
  }
  if (config.samples < 1) throw PreconditionError("samples must be >= 1");
  if (config.threads < 1) throw PreconditionError("threads must be >= 1");
  const std::size_t length = tau.size() * config.j;
  if (config.subset_samples == 0 && length > max_exact_length(pi.size())) {
    throw ResourceError("exact counting limited to inflations of length <= " +
                        std::to_string(max_exact_length(pi.size())) + ", got " +
                        std::to_string(length) + "; use subset sampling");
  }

  std::vector<double> per_sample(config.samples);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t s = next.fetch_add(1); s < config.samples;
         s = next.fetch_add(1)) {
      SampleRng rng(config.seed, s);
      const Permutation lambda = random_permutation(config.j, rng);
      const Permutation text = inflate(tau, lambda);
      per_sample[s] = config.subset_samples == 0
                          ? exact_density(pi, text)
                          : sampled_density(pi, text, config.subset_samples, rng);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < config.threads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  Estimate est;
  est.samples = config.samples;
  est.j = config.j;
  est.seed = config.seed;
  double sum = 0.0;
  for (double x : per_sample) sum += x;
  est.mean = sum / static_cast<double>(config.samples);
  if (config.samples > 1) {
    double ss = 0.0;
    for (double x : per_sample) ss += (x - est.mean) * (x - est.mean);
    const double var = ss / static_cast<double>(config.samples - 1);
    est.std_error = std::sqrt(var / static_cast<double>(config.samples));
  }
  return est;
}

}  // namespace inflatable
