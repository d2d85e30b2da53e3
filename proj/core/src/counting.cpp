#include "inflatable/counting.hpp"

#include <algorithm>
#include <vector>

#include "inflatable/error.hpp"

namespace inflatable {

namespace {

// Does text restricted to `positions` induce `pattern`? Compares every pair
// of relative orders, so no rank reduction is needed.
bool induces(const Permutation& pattern, const Permutation& text,
             const std::vector<std::size_t>& positions) {
  const std::size_t k = positions.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      bool text_less = text[positions[a]] < text[positions[b]];
      bool pattern_less = pattern[a] < pattern[b];
      if (text_less != pattern_less) return false;
    }
  }
  return true;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}

  void add(std::size_t i) {
    for (; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  }

  // Number of inserted values in 1..i.
  std::uint64_t prefix(std::size_t i) const {
    std::uint64_t sum = 0;
    for (; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  }

 private:
  std::vector<std::uint64_t> tree_;
};

std::uint64_t choose2(std::uint64_t x) { return x * (x - (x > 0)) / 2; }

}  // namespace

std::uint64_t count_occurrences(const Permutation& pattern,
                                const Permutation& text) {
  std::uint64_t count = 0;
  for_each_subset(text.size(), pattern.size(),
                  [&](const std::vector<std::size_t>& positions) {
                    if (induces(pattern, text, positions)) ++count;
                  });
  return count;
}

Rational density(const Permutation& pattern, const Permutation& text) {
  if (pattern.size() > text.size()) {
    throw PreconditionError("density undefined: pattern length " +
                            std::to_string(pattern.size()) +
                            " exceeds text length " + std::to_string(text.size()));
  }
  return Rational(BigInt(count_occurrences(pattern, text)),
                  binomial(text.size(), pattern.size()));
}

std::map<Permutation, std::uint64_t> tally_patterns(std::size_t k,
                                                    const Permutation& text) {
  if (k == 0) throw PreconditionError("pattern length must be positive");
  std::map<Permutation, std::uint64_t> tally;
  // Seed every pattern of length k with 0.
  std::vector<int> p(k);
  for (std::size_t i = 0; i < k; ++i) p[i] = static_cast<int>(i + 1);
  do {
    tally.emplace(Permutation(p), 0);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<int> window(k);
  for_each_subset(text.size(), k, [&](const std::vector<std::size_t>& positions) {
    for (std::size_t i = 0; i < k; ++i) window[i] = text[positions[i]];
    ++tally[pattern_of(window)];
  });
  return tally;
}

const std::array<Permutation, 6>& length3_patterns() {
  static const std::array<Permutation, 6> patterns = {
      Permutation{1, 2, 3}, Permutation{1, 3, 2}, Permutation{2, 1, 3},
      Permutation{2, 3, 1}, Permutation{3, 1, 2}, Permutation{3, 2, 1}};
  return patterns;
}

std::uint64_t PatternCounts3::count(const Permutation& pattern) const {
  if (pattern.size() == 2) return pattern[0] == 1 ? inv12 : inv21;
  if (pattern.size() == 3) {
    const auto& all = length3_patterns();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i] == pattern) return counts[i];
    }
  }
  throw PreconditionError("PatternCounts3 holds only length-2 and length-3 patterns");
}

PatternCounts3 count_length3_all(const Permutation& tau) {
  const std::size_t n = tau.size();
  if (n < 3) {
    throw PreconditionError("length-3 counts need |tau| >= 3, got " +
                            std::to_string(n));
  }
  // For the element at position j: ll/lg = smaller/greater to its left,
  // rl/rg = smaller/greater to its right.
  //   123 = sum ll*rg            321 = sum lg*rl
  //   132 + 231 = sum ll*rl      213 + 312 = sum lg*rg
  //   123 + 132 = sum C(rg, 2)   321 + 312 = sum C(rl, 2)
  Fenwick fenwick(n);
  std::uint64_t c123 = 0, c321 = 0, mid_max = 0, mid_min = 0;
  std::uint64_t first_min = 0, first_max = 0, inv12 = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = static_cast<std::uint64_t>(tau[j]);
    std::uint64_t ll = fenwick.prefix(v);
    std::uint64_t lg = j - ll;
    std::uint64_t rl = (v - 1) - ll;
    std::uint64_t rg = (n - 1 - j) - rl;
    c123 += ll * rg;
    c321 += lg * rl;
    mid_max += ll * rl;
    mid_min += lg * rg;
    first_min += choose2(rg);
    first_max += choose2(rl);
    inv12 += ll;
    fenwick.add(v);
  }

  PatternCounts3 out;
  out[Pattern3::p123] = c123;
  out[Pattern3::p321] = c321;
  out[Pattern3::p132] = first_min - c123;
  out[Pattern3::p231] = mid_max - out[Pattern3::p132];
  out[Pattern3::p312] = first_max - c321;
  out[Pattern3::p213] = mid_min - out[Pattern3::p312];
  out.inv12 = inv12;
  out.inv21 = n * (n - 1) / 2 - inv12;
  return out;
}

}  // namespace inflatable
