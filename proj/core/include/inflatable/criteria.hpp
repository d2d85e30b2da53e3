#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "inflatable/counting.hpp"
#include "inflatable/permutation.hpp"
#include "inflatable/rational.hpp"

namespace inflatable {

inline constexpr std::uint32_t kResidueModulus = 144;

/// Required densities of 12 and the six length-3 patterns for a
/// 3-inflatable permutation of length n >= 3:
/// 123, 321 -> (2n-7)/(12(n-2)); 132, 213, 231, 312 -> (4n-5)/(24(n-2));
/// 12 -> 1/2.
std::map<Permutation, Rational> target_densities_3(std::size_t n);

/// Target densities scaled to occurrence counts. nullopt when any target
/// count is not an integer, in which case no permutation of length n is
/// 3-inflatable.
std::optional<PatternCounts3> target_counts_3(std::size_t n);

bool is_2_inflatable(const Permutation& tau);

struct InflatabilityReport {
  std::size_t length = 0;
  bool admissible_length = false;
  std::map<Permutation, Rational> required;
  std::map<Permutation, Rational> observed;
  std::map<Permutation, std::uint64_t> observed_counts;
  bool verdict = false;
};

/// Exact 3-inflatability test. Length 1 is trivially 3-inflatable; length 2
/// never is.
InflatabilityReport check_3_inflatable(const Permutation& tau);

/// Residues r mod `modulus` such that every n = r (mod modulus) satisfies
/// 144 | n(n-1)(4n-5), 72 | n(n-1)(2n-7) and 2 | C(n,2).
std::vector<std::uint32_t> admissible_residues(
    std::uint32_t modulus = kResidueModulus);

bool is_admissible_length(std::uint64_t n);

struct ResidueTable {
  std::vector<std::uint32_t> residues;
  std::vector<std::vector<std::uint32_t>> products;  // products[r][s] mod 144
};

ResidueTable residue_multiplication_table();

/// inflate(tau1, tau2), refusing unless both inputs are 3-inflatable.
Permutation compose_inflatables(const Permutation& tau1,
                                const Permutation& tau2);

}  // namespace inflatable
