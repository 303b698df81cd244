#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nanotop {

// Point index within a universe; Mask is the characteristic vector of a
// subset (bit i set <=> point i is a member).
using Point = std::uint32_t;
using Mask = std::uint32_t;

// A labeled finite ground set. Immutable; shared by the sets, partitions,
// spaces and maps built over it.
class Universe {
public:
    // Hard cap so every subset fits a Mask and 2^n family scans stay instant.
    static constexpr int max_points = 16;

    // Labels must be distinct, nonempty, and 1..max_points many.
    explicit Universe(std::vector<std::string> labels);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    Mask full_mask() const noexcept {
        return static_cast<Mask>((1u << labels_.size()) - 1u);
    }
    const std::string& label(Point p) const { return labels_.at(p); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    // Index of a label, if present.
    std::optional<Point> find(std::string_view label) const;

private:
    std::vector<std::string> labels_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> labels);

// Universe with points labeled "p1".."pn"; cached, so repeated calls return
// the same object (enumeration helpers lean on that).
UniversePtr canonical_universe(int n);

// Extensional equality: same labels in the same order. Pointer equality is
// the fast path.
bool same_universe(const UniversePtr& a, const UniversePtr& b);

// A subset of a universe. Equality is extensional.
struct PointSet {
    UniversePtr universe;
    Mask bits = 0;

    int size() const noexcept { return std::popcount(bits); }
    bool empty() const noexcept { return bits == 0; }
    bool contains(Point p) const noexcept { return (bits >> p) & 1u; }
    std::vector<std::string> labels() const;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.bits == b.bits && same_universe(a.universe, b.universe);
    }
};

PointSet set_of(const UniversePtr& u, Mask bits);
PointSet set_from_labels(const UniversePtr& u,
                         const std::vector<std::string>& labels);
PointSet empty_set(const UniversePtr& u);
PointSet full_set(const UniversePtr& u);
PointSet complement(const PointSet& a);

// "{r1,r2}" rendering in universe point order; "{}" for the empty set.
std::string set_to_string(const UniversePtr& u, Mask bits);

}  // namespace nanotop
