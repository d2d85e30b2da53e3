#pragma once

#include <cstddef>
#include <vector>

#include "inflatable/permutation.hpp"

namespace inflatable {

/// A representation of a permutation as a generalized inflation of `outer`
/// with `inner[i]` in block i.
struct BlockPartition {
  Permutation outer;
  std::vector<Permutation> inner;
  std::vector<std::size_t> sizes;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

inline constexpr std::size_t kMaxBlockPartitionLength = 10;

/// Every block-partition of `pi`, each exactly once, ordered
/// lexicographically by the block-size composition.
///
/// A composition of |pi| into consecutive position segments is accepted iff
/// every segment's value set is an interval of integers.
std::vector<BlockPartition> block_partitions(const Permutation& pi);

}  // namespace inflatable
