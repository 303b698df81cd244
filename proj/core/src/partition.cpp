#include "nanotop/partition.hpp"

#include <stdexcept>

namespace nanotop {

Partition make_partition(const UniversePtr& u, std::vector<Mask> blocks) {
    if (!u) throw std::invalid_argument("null universe");
    Mask covered = 0;
    for (Mask b : blocks) {
        if (b == 0) {
            throw std::invalid_argument("partition block is empty");
        }
        if (b & ~u->full_mask()) {
            throw std::invalid_argument(
                "partition block has members outside the universe");
        }
        if (b & covered) {
            throw std::invalid_argument("partition blocks overlap at " +
                                        set_to_string(u, b & covered));
        }
        covered |= b;
    }
    if (covered != u->full_mask()) {
        throw std::invalid_argument(
            "partition blocks do not cover the universe; missing " +
            set_to_string(u, u->full_mask() & ~covered));
    }
    return Partition{u, std::move(blocks)};
}

Partition partition_from_labels(
    const UniversePtr& u, const std::vector<std::vector<std::string>>& blocks) {
    std::vector<Mask> masks;
    masks.reserve(blocks.size());
    for (const auto& labels : blocks) {
        masks.push_back(set_from_labels(u, labels).bits);
    }
    return make_partition(u, std::move(masks));
}

}  // namespace nanotop
