#include "nanotop/open_sets.hpp"

#include <stdexcept>

namespace nanotop {

bool is_n_open_mask(const NanoSpace& s, Mask a) { return s.is_open_mask(a); }

bool is_n_open(const NanoSpace& s, const PointSet& a) {
    if (!same_universe(s.universe(), a.universe)) {
        throw std::invalid_argument("is_n_open: universes do not match");
    }
    return is_n_open_mask(s, a.bits);
}

bool is_nalpha_open_mask(const NanoSpace& s, Mask a) {
    const Mask hull = s.interior_mask(s.closure_mask(s.interior_mask(a)));
    return (a & hull) == a;
}

bool is_nalpha_open(const NanoSpace& s, const PointSet& a) {
    if (!same_universe(s.universe(), a.universe)) {
        throw std::invalid_argument("is_nalpha_open: universes do not match");
    }
    return is_nalpha_open_mask(s, a.bits);
}

NsalphaOpenCheck nsalpha_open_check(const NanoSpace& s, Mask a) {
    NsalphaOpenCheck out{};
    const Mask hull =
        s.closure_mask(s.interior_mask(s.closure_mask(s.interior_mask(a))));
    out.closure_formula = (a & hull) == a;

    out.existential = false;
    const Mask full = s.full_mask();
    for (Mask p = 0;; ++p) {
        if (is_nalpha_open_mask(s, p) && (p & a) == p) {
            const Mask cl = s.closure_mask(p);
            if ((a & cl) == a) {
                out.existential = true;
                break;
            }
        }
        if (p == full) break;
    }
    return out;
}

bool is_nsalpha_open_mask(const NanoSpace& s, Mask a) {
    return nsalpha_open_check(s, a).closure_formula;
}

bool is_nsalpha_open(const NanoSpace& s, const PointSet& a) {
    if (!same_universe(s.universe(), a.universe)) {
        throw std::invalid_argument("is_nsalpha_open: universes do not match");
    }
    return is_nsalpha_open_mask(s, a.bits);
}

bool satisfies_kind(const NanoSpace& s, FamilyKind k, Mask a) {
    const Mask full = s.full_mask();
    switch (k) {
        case FamilyKind::n_open: return is_n_open_mask(s, a);
        case FamilyKind::nalpha_open: return is_nalpha_open_mask(s, a);
        case FamilyKind::nsalpha_open: return is_nsalpha_open_mask(s, a);
        case FamilyKind::n_closed: return is_n_open_mask(s, full & ~a);
        case FamilyKind::nalpha_closed: return is_nalpha_open_mask(s, full & ~a);
        case FamilyKind::nsalpha_closed:
            return is_nsalpha_open_mask(s, full & ~a);
    }
    return false;
}

SetFamily enumerate_family(const NanoSpace& s, FamilyKind k) {
    std::vector<Mask> members;
    const Mask full = s.full_mask();
    for (Mask a = 0;; ++a) {
        if (satisfies_kind(s, k, a)) members.push_back(a);
        if (a == full) break;
    }
    return make_family(s.universe(), std::move(members));
}

}  // namespace nanotop
