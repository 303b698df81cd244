#pragma once

#include <string_view>
#include <vector>

#include "nanotop/universe.hpp"

namespace nanotop {

// The six set kinds the toolkit distinguishes. Closed kinds are exactly the
// complements of the matching open kinds.
enum class FamilyKind {
    n_open,
    nalpha_open,
    nsalpha_open,
    n_closed,
    nalpha_closed,
    nsalpha_closed,
};

std::string_view family_kind_name(FamilyKind k);
bool is_open_kind(FamilyKind k);
// n_closed <-> n_open etc.
FamilyKind dual_kind(FamilyKind k);

// Canonical member order for families: ascending cardinality, ties broken by
// ascending characteristic-vector value. Keeps every printed family and every
// witness report deterministic.
bool canonical_less(Mask a, Mask b);

// A duplicate-free family of subsets of one universe, kept in canonical order.
struct SetFamily {
    UniversePtr universe;
    std::vector<Mask> members;

    int size() const noexcept { return static_cast<int>(members.size()); }
    bool contains(Mask m) const;

    friend bool operator==(const SetFamily& a, const SetFamily& b) {
        return a.members == b.members && same_universe(a.universe, b.universe);
    }
};

// Deduplicates, validates masks against the universe, sorts canonically.
SetFamily make_family(const UniversePtr& u, std::vector<Mask> members);

// Family given as label lists (one inner vector per member set).
SetFamily family_from_labels(
    const UniversePtr& u,
    const std::vector<std::vector<std::string>>& members);

// Pointwise complements of f's members, canonical order.
SetFamily complement_family(const SetFamily& f);

}  // namespace nanotop
