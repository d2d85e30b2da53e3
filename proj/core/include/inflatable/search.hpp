#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "inflatable/counting.hpp"
#include "inflatable/permutation.hpp"
#include "inflatable/rational.hpp"

namespace inflatable {

/// Lazily yields every centrally symmetric permutation of length n in
/// lexicographic order.
class CentrallySymmetricEnumerator {
 public:
  explicit CentrallySymmetricEnumerator(std::size_t n);

  std::optional<Permutation> next();

 private:
  bool advance(std::size_t depth);

  std::size_t n_;
  std::vector<int> values_;
  std::vector<bool> used_;
  bool started_ = false;
  bool done_ = false;
};

/// 2^m m! with m = floor(n/2).
BigInt centrally_symmetric_count(std::size_t n);

struct SearchConfig {
  std::size_t n = 17;
  bool central_only = true;
  std::optional<std::uint64_t> limit;
  unsigned threads = 1;
  bool emit_all = false;
  std::optional<std::chrono::milliseconds> timeout;
  // Called once per hit as it is found, in scheduling order, when emit_all is
  // set. Invocations are serialized.
  std::function<void(std::size_t subtree, const Permutation&)> on_hit;
};

enum class SearchStatus { complete, limit_reached, timed_out, inadmissible };

struct SearchResult {
  SearchStatus status = SearchStatus::complete;
  std::vector<Permutation> hits;  // sorted, deduplicated
  BigInt scanned;                 // candidates covered, pruned ones included
  std::uint64_t found = 0;
  std::uint64_t nodes = 0;        // search-tree nodes actually expanded
  std::size_t subtrees = 0;
  std::string reason;
};

/// Exhaustive pruned search for permutations of length config.n whose
/// length-3 and length-2 counts equal target_counts_3(config.n).
///
/// Returns status inadmissible with no scan when the targets are not
/// integral. With a limit of K the result is the first K hits in canonical
/// order, and `scanned` counts candidates up to and including the K-th.
SearchResult search_3_inflatable(const SearchConfig& config);

/// Same search against arbitrary target counts.
SearchResult search_for_counts(const SearchConfig& config,
                               const PatternCounts3& targets);

/// Unpruned reference: counts every candidate from scratch.
SearchResult reference_search_for_counts(std::size_t n, bool central_only,
                                         const PatternCounts3& targets);

}  // namespace inflatable
