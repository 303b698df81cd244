#pragma once

#include <vector>

#include "nanotop/universe.hpp"

namespace nanotop {

// Equivalence classes over a universe: nonempty, pairwise disjoint blocks
// whose union is the whole universe. Block order is preserved as given.
struct Partition {
    UniversePtr universe;
    std::vector<Mask> blocks;

    int block_count() const noexcept { return static_cast<int>(blocks.size()); }
};

// Validates the partition laws; throws std::invalid_argument naming the
// offending block on failure.
Partition make_partition(const UniversePtr& u, std::vector<Mask> blocks);

// Convenience: blocks given as label lists.
Partition partition_from_labels(
    const UniversePtr& u,
    const std::vector<std::vector<std::string>>& blocks);

}  // namespace nanotop
