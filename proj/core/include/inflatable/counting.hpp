#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>

#include "inflatable/permutation.hpp"
#include "inflatable/rational.hpp"

namespace inflatable {

/// Number of |pattern|-element index subsets of `text` that induce `pattern`.
///
/// Exhaustive subset enumeration; this is the reference counter the fast
/// paths are tested against. Returns 0 when the pattern is longer than the
/// text.
std::uint64_t count_occurrences(const Permutation& pattern,
                                const Permutation& text);

/// t(pattern, text): occurrences over C(|text|, |pattern|). Throws
/// PreconditionError when the pattern is longer than the text.
Rational density(const Permutation& pattern, const Permutation& text);

/// Occurrence counts of every pattern of length k in `text`, from one pass
/// over all k-subsets. Patterns that never occur are present with count 0.
std::map<Permutation, std::uint64_t> tally_patterns(std::size_t k,
                                                    const Permutation& text);

enum class Pattern3 : std::size_t { p123, p132, p213, p231, p312, p321 };

struct PatternCounts3 {
  std::array<std::uint64_t, 6> counts{};  // indexed by Pattern3
  std::uint64_t inv12 = 0;                // non-inversions
  std::uint64_t inv21 = 0;                // inversions

  std::uint64_t operator[](Pattern3 p) const noexcept {
    return counts[static_cast<std::size_t>(p)];
  }
  std::uint64_t& operator[](Pattern3 p) noexcept {
    return counts[static_cast<std::size_t>(p)];
  }

  // Count for 12, 21 or any length-3 pattern; PreconditionError otherwise.
  std::uint64_t count(const Permutation& pattern) const;

  friend bool operator==(const PatternCounts3&, const PatternCounts3&) = default;
};

// The six length-3 patterns in Pattern3 order (lexicographic).
const std::array<Permutation, 6>& length3_patterns();

/// All six length-3 counts plus both length-2 counts in O(n log n), using a
/// Fenwick tree for left-smaller counts. Requires |tau| >= 3.
PatternCounts3 count_length3_all(const Permutation& tau);

}  // namespace inflatable
