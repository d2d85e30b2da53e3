#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace inflatable {

/// A permutation of {1, ..., n}, n >= 1, stored as its one-line notation.
///
/// Construction validates the bijection invariant, so every Permutation in
/// circulation is well formed. Comparison is lexicographic on the one-line
/// notation, which is the canonical order used for all sorted output.
class Permutation {
 public:
  using value_type = int;

  explicit Permutation(std::vector<value_type> values);
  Permutation(std::initializer_list<value_type> values)
      : Permutation(std::vector<value_type>(values)) {}

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }

  // 0-indexed position, 1-based value.
  value_type operator[](std::size_t i) const noexcept { return values_[i]; }

  std::span<const value_type> values() const noexcept { return values_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<value_type> values, Unchecked)
      : values_(std::move(values)) {}

  friend Permutation pattern_of(std::span<const value_type>);
  friend Permutation inflate(const Permutation&, const Permutation&);

  std::vector<value_type> values_;
};

enum class Style {
  compact,  // 1-9 then A-Z for 10..35
  comma,    // comma-separated decimal
};

inline constexpr std::size_t kMaxCompactLength = 35;

/// Parses either notation. Input containing a comma is read as comma form;
/// otherwise each character is one entry in compact form.
Permutation parse_permutation(std::string_view text);

std::string format_permutation(const Permutation& p, Style style);

// Compact when it fits, comma form otherwise.
std::string to_string(const Permutation& p);

/// The permutation order-isomorphic to `values` (rank reduction).
Permutation pattern_of(std::span<const Permutation::value_type> values);

/// Inflation: |tau| consecutive blocks, each order-isomorphic to gamma,
/// arranged relative to each other like tau.
Permutation inflate(const Permutation& tau, const Permutation& gamma);

/// Inflation with a different permutation in each block; blocks.size() must
/// equal tau.size().
Permutation generalized_inflate(const Permutation& tau,
                                std::span<const Permutation> blocks);

/// 180-degree rotation of the plot: R(p)_i = n + 1 - p_{n+1-i}.
Permutation rotate(const Permutation& p);

bool is_centrally_symmetric(const Permutation& p);

}  // namespace inflatable
