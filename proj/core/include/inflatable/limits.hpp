#pragma once

#include <cstddef>
#include <map>

#include "inflatable/permutation.hpp"
#include "inflatable/rational.hpp"

namespace inflatable {

inline constexpr std::size_t kMaxLimitPatternLength = 6;

/// Limit densities of patterns in a convergent sequence {gamma_j}.
///
/// Validated on construction: every length class that appears must be
/// complete and sum to 1. The length-1 entry is implied (density 1) when
/// absent and must equal 1 when given.
class DensityProfile {
 public:
  explicit DensityProfile(std::map<Permutation, Rational> entries);

  // Throws PreconditionError if `pattern` has no entry.
  const Rational& at(const Permutation& pattern) const;
  bool contains(const Permutation& pattern) const;

  // Longest pattern length present.
  std::size_t max_length() const noexcept;

  const std::map<Permutation, Rational>& entries() const noexcept {
    return entries_;
  }

 private:
  std::map<Permutation, Rational> entries_;
};

/// 1/k! for every pattern of each length k <= max_len (1 <= max_len <= 6).
DensityProfile uniform_profile(std::size_t max_len);

/// Exact limit density of `pi` in inflate(tau, gamma_j) where {gamma_j} has
/// limit densities `profile`:
///
///   |pi|! / |tau|^|pi| * sum over (b, sigma) in B(pi) of
///       C(|tau|, |sigma|) t(sigma, tau) * prod over alpha in b of
///       profile(alpha) / |alpha|!
///
/// C(|tau|, |sigma|) t(sigma, tau) is the occurrence count of sigma in tau,
/// which is 0 when sigma is longer than tau.
Rational limit_density_inflation(const Permutation& pi, const Permutation& tau,
                                  const DensityProfile& profile);

/// Limit density of `pi` in the uniform inflation of `tau`. Evaluated with
/// the 1/|alpha|!^2 block weights directly rather than through a profile.
Rational limit_density_uniform(const Permutation& pi, const Permutation& tau);

// Coefficients of t(132, inflate(tau)) = a t(132, tau) + b t(12, tau) + c.
struct LinearCoefficients {
  Rational a;
  Rational b;
  Rational c;
};

/// a = 3!/n^3 C(n,3), b = 3!/n^3 C(n,2)/4, c = 3!/n^3 n/36. Requires n >= 3.
LinearCoefficients abc_coefficients(std::size_t n);

}  // namespace inflatable
