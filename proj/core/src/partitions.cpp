#include "inflatable/partitions.hpp"

#include <algorithm>

#include "inflatable/error.hpp"

namespace inflatable {

namespace {

void extend(const Permutation& pi, std::size_t start,
            std::vector<std::size_t>& sizes, std::vector<BlockPartition>& out) {
  const std::size_t n = pi.size();
  if (start == n) {
    std::vector<Permutation> inner;
    std::vector<int> block_min;
    inner.reserve(sizes.size());
    std::size_t pos = 0;
    for (std::size_t len : sizes) {
      auto segment = pi.values().subspan(pos, len);
      inner.push_back(pattern_of(segment));
      block_min.push_back(*std::min_element(segment.begin(), segment.end()));
      pos += len;
    }
    out.push_back({pattern_of(block_min), std::move(inner), sizes});
    return;
  }
  // Segments starting at `start`, shortest first; keep those whose values
  // form an integer interval.
  int lo = pi[start];
  int hi = pi[start];
  for (std::size_t end = start + 1; end <= n; ++end) {
    lo = std::min(lo, pi[end - 1]);
    hi = std::max(hi, pi[end - 1]);
    if (static_cast<std::size_t>(hi - lo + 1) != end - start) continue;
    sizes.push_back(end - start);
    extend(pi, end, sizes, out);
    sizes.pop_back();
  }
}

}  // namespace

std::vector<BlockPartition> block_partitions(const Permutation& pi) {
  if (pi.size() > kMaxBlockPartitionLength) {
    throw PreconditionError("block partitions limited to length <= " +
                        std::to_string(kMaxBlockPartitionLength) + ", got " +
                        std::to_string(pi.size()));
  }
  std::vector<BlockPartition> out;
  std::vector<std::size_t> sizes;
  extend(pi, 0, sizes, out);
  return out;
}

}  // namespace inflatable
