#include "inflatable/limits.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "inflatable/counting.hpp"
#include "inflatable/error.hpp"
#include "inflatable/partitions.hpp"

namespace inflatable {

namespace {

std::vector<Permutation> all_patterns(std::size_t k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void check_pattern_length(const Permutation& pi) {
  if (pi.size() > kMaxLimitPatternLength) {
    throw PreconditionError("limit densities supported for pattern length <= " +
                            std::to_string(kMaxLimitPatternLength) + ", got " +
                            std::to_string(pi.size()));
  }
}

// Occurrence counts of outer patterns in tau, computed once per length.
class OuterCounts {
 public:
  explicit OuterCounts(const Permutation& tau) : tau_(tau) {}

  std::uint64_t operator()(const Permutation& sigma) {
    const std::size_t k = sigma.size();
    if (k > tau_.size()) return 0;
    if (k == 1) return tau_.size();
    if (k <= 3 && tau_.size() >= 3) {
      if (!fast_) fast_ = count_length3_all(tau_);
      return fast_->count(sigma);
    }
    auto it = by_length_.find(k);
    if (it == by_length_.end()) {
      it = by_length_.emplace(k, tally_patterns(k, tau_)).first;
    }
    return it->second.at(sigma);
  }

 private:
  const Permutation& tau_;
  std::optional<PatternCounts3> fast_;
  std::map<std::size_t, std::map<Permutation, std::uint64_t>> by_length_;
};

template <typename BlockWeight>
Rational limit_sum(const Permutation& pi, const Permutation& tau,
                   BlockWeight&& weight) {
  check_pattern_length(pi);
  OuterCounts counts(tau);
  Rational sum = 0;
  for (const auto& partition : block_partitions(pi)) {
    std::uint64_t occurrences = counts(partition.outer);
    if (occurrences == 0) continue;
    Rational term = Rational(BigInt(occurrences));
    for (const auto& alpha : partition.inner) term *= weight(alpha);
    sum += term;
  }
  BigInt scale_den = 1;
  for (std::size_t i = 0; i < pi.size(); ++i) scale_den *= tau.size();
  return sum * Rational(factorial(pi.size()), scale_den);
}

}  // namespace

DensityProfile::DensityProfile(std::map<Permutation, Rational> entries)
    : entries_(std::move(entries)) {
  const Permutation single{1};
  auto one = entries_.find(single);
  if (one == entries_.end()) {
    entries_.emplace(single, Rational(1));
  } else if (one->second != 1) {
    throw PreconditionError("profile density of pattern 1 must be 1, got " +
                            to_string(one->second));
  }

  std::map<std::size_t, Rational> sums;
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& [pattern, value] : entries_) {
    if (value < 0 || value > 1) {
      throw PreconditionError("profile density of " + to_string(pattern) +
                              " outside [0, 1]: " + to_string(value));
    }
    sums[pattern.size()] += value;
    ++sizes[pattern.size()];
  }
  for (const auto& [k, count] : sizes) {
    if (BigInt(count) != factorial(k)) {
      throw PreconditionError("profile is missing patterns of length " +
                              std::to_string(k) + " (" + std::to_string(count) +
                              " of " + factorial(k).str() + " given)");
    }
    if (sums[k] != 1) {
      throw PreconditionError("profile densities of length " + std::to_string(k) +
                              " sum to " + to_string(sums[k]) + ", not 1");
    }
  }
}

const Rational& DensityProfile::at(const Permutation& pattern) const {
  auto it = entries_.find(pattern);
  if (it == entries_.end()) {
    throw PreconditionError("profile has no entry for pattern " + to_string(pattern));
  }
  return it->second;
}

bool DensityProfile::contains(const Permutation& pattern) const {
  return entries_.count(pattern) != 0;
}

std::size_t DensityProfile::max_length() const noexcept {
  std::size_t longest = 0;
  for (const auto& entry : entries_) longest = std::max(longest, entry.first.size());
  return longest;
}

DensityProfile uniform_profile(std::size_t max_len) {
  if (max_len < 1 || max_len > kMaxLimitPatternLength) {
    throw PreconditionError("uniform profile length must be in 1..6, got " +
                            std::to_string(max_len));
  }
  std::map<Permutation, Rational> entries;
  for (std::size_t k = 1; k <= max_len; ++k) {
    Rational value(BigInt(1), factorial(k));
    for (auto& p : all_patterns(k)) entries.emplace(std::move(p), value);
  }
  return DensityProfile(std::move(entries));
}

Rational limit_density_inflation(const Permutation& pi, const Permutation& tau,
                                  const DensityProfile& profile) {
  return limit_sum(pi, tau, [&](const Permutation& alpha) {
    return profile.at(alpha) / Rational(factorial(alpha.size()));
  });
}

Rational limit_density_uniform(const Permutation& pi, const Permutation& tau) {
  return limit_sum(pi, tau, [](const Permutation& alpha) {
    BigInt f = factorial(alpha.size());
    return Rational(BigInt(1), f * f);
  });
}

LinearCoefficients abc_coefficients(std::size_t n) {
  if (n < 3) {
    throw PreconditionError("linear-form coefficients need n >= 3, got " +
                            std::to_string(n));
  }
  BigInt cube = BigInt(n) * n * n;
  Rational scale(BigInt(6), cube);
  return {scale * Rational(binomial(n, 3)),
          scale * Rational(binomial(n, 2), BigInt(4)),
          scale * Rational(BigInt(n), BigInt(36))};
}

}  // namespace inflatable
