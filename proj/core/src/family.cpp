#include "nanotop/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace nanotop {

std::string_view family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::n_open: return "n_open";
        case FamilyKind::nalpha_open: return "nalpha_open";
        case FamilyKind::nsalpha_open: return "nsalpha_open";
        case FamilyKind::n_closed: return "n_closed";
        case FamilyKind::nalpha_closed: return "nalpha_closed";
        case FamilyKind::nsalpha_closed: return "nsalpha_closed";
    }
    return "?";
}

bool is_open_kind(FamilyKind k) {
    return k == FamilyKind::n_open || k == FamilyKind::nalpha_open ||
           k == FamilyKind::nsalpha_open;
}

FamilyKind dual_kind(FamilyKind k) {
    switch (k) {
        case FamilyKind::n_open: return FamilyKind::n_closed;
        case FamilyKind::nalpha_open: return FamilyKind::nalpha_closed;
        case FamilyKind::nsalpha_open: return FamilyKind::nsalpha_closed;
        case FamilyKind::n_closed: return FamilyKind::n_open;
        case FamilyKind::nalpha_closed: return FamilyKind::nalpha_open;
        case FamilyKind::nsalpha_closed: return FamilyKind::nsalpha_open;
    }
    return k;
}

bool canonical_less(Mask a, Mask b) {
    const int ca = std::popcount(a);
    const int cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return a < b;
}

bool SetFamily::contains(Mask m) const {
    return std::binary_search(members.begin(), members.end(), m, canonical_less);
}

SetFamily make_family(const UniversePtr& u, std::vector<Mask> members) {
    if (!u) throw std::invalid_argument("null universe");
    for (Mask m : members) {
        if (m & ~u->full_mask()) {
            throw std::invalid_argument(
                "family member has points outside the universe");
        }
    }
    std::sort(members.begin(), members.end(), canonical_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return SetFamily{u, std::move(members)};
}

SetFamily family_from_labels(
    const UniversePtr& u, const std::vector<std::vector<std::string>>& members) {
    std::vector<Mask> masks;
    masks.reserve(members.size());
    for (const auto& labels : members) {
        masks.push_back(set_from_labels(u, labels).bits);
    }
    return make_family(u, std::move(masks));
}

SetFamily complement_family(const SetFamily& f) {
    std::vector<Mask> masks;
    masks.reserve(f.members.size());
    const Mask full = f.universe->full_mask();
    for (Mask m : f.members) masks.push_back(full & ~m);
    return make_family(f.universe, std::move(masks));
}

}  // namespace nanotop
