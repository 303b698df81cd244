#include "nanotop/continuity.hpp"

#include <algorithm>
#include <stdexcept>

namespace nanotop {

std::string_view class_token(ContinuityClass c) {
    switch (c) {
        case ContinuityClass::n: return "N";
        case ContinuityClass::nalpha: return "Na";
        case ContinuityClass::nalpha_star: return "Na*";
        case ContinuityClass::nalpha_2star: return "Na**";
        case ContinuityClass::nsalpha: return "NSa";
        case ContinuityClass::nsalpha_star: return "NSa*";
        case ContinuityClass::nsalpha_2star: return "NSa**";
    }
    return "?";
}

std::optional<ContinuityClass> parse_class_token(std::string_view token) {
    for (ContinuityClass c : all_continuity_classes) {
        if (class_token(c) == token) return c;
    }
    return std::nullopt;
}

ClassRule class_rule(ContinuityClass c) {
    switch (c) {
        case ContinuityClass::n:
            return {FamilyKind::n_open, FamilyKind::n_open};
        case ContinuityClass::nalpha:
            return {FamilyKind::n_open, FamilyKind::nalpha_open};
        case ContinuityClass::nalpha_star:
            return {FamilyKind::nalpha_open, FamilyKind::nalpha_open};
        case ContinuityClass::nalpha_2star:
            return {FamilyKind::nalpha_open, FamilyKind::n_open};
        case ContinuityClass::nsalpha:
            return {FamilyKind::n_open, FamilyKind::nsalpha_open};
        case ContinuityClass::nsalpha_star:
            return {FamilyKind::nsalpha_open, FamilyKind::nsalpha_open};
        case ContinuityClass::nsalpha_2star:
            return {FamilyKind::nsalpha_open, FamilyKind::n_open};
    }
    throw std::invalid_argument("bad continuity class");
}

std::uint8_t ContinuityProfile::class_bits() const noexcept {
    std::uint8_t bits = 0;
    for (int i = 0; i < continuity_class_count; ++i) {
        if (holds[i]) bits |= static_cast<std::uint8_t>(1u << i);
    }
    return bits;
}

namespace {

void require_map_matches(const FiniteMap& h, const NanoSpace& domain_space,
                         const NanoSpace& codomain_space) {
    if (!same_universe(h.domain(), domain_space.universe()) ||
        !same_universe(h.codomain(), codomain_space.universe())) {
        throw std::invalid_argument("map universes do not match the spaces");
    }
}

}  // namespace

bool is_family_continuous(const FiniteMap& h, const SetFamily& codomain_family,
                          FamilyKind domain_kind,
                          const NanoSpace& domain_space) {
    if (!same_universe(h.domain(), domain_space.universe()) ||
        !same_universe(h.codomain(), codomain_family.universe)) {
        throw std::invalid_argument(
            "is_family_continuous: universes do not match");
    }
    for (Mask d : codomain_family.members) {
        if (!satisfies_kind(domain_space, domain_kind, h.preimage_mask(d))) {
            return false;
        }
    }
    return true;
}

ContinuityProfile classify(const FiniteMap& h, const NanoSpace& domain_space,
                           const NanoSpace& codomain_space) {
    require_map_matches(h, domain_space, codomain_space);
    ContinuityProfile out;
    for (ContinuityClass c : all_continuity_classes) {
        const ClassRule rule = class_rule(c);
        const SetFamily fam = enumerate_family(codomain_space, rule.codomain_kind);
        out.holds[static_cast<int>(c)] =
            is_family_continuous(h, fam, rule.domain_kind, domain_space);
    }
    out.n_open_map = is_n_open_map(h, domain_space, codomain_space);
    return out;
}

bool is_n_open_map(const FiniteMap& h, const NanoSpace& domain_space,
                   const NanoSpace& codomain_space) {
    require_map_matches(h, domain_space, codomain_space);
    for (Mask o : domain_space.opens().members) {
        if (!codomain_space.is_open_mask(h.image_mask(o))) return false;
    }
    return true;
}

std::array<bool, 4> nsalpha_characterizations(const FiniteMap& h,
                                              const NanoSpace& domain_space,
                                              const NanoSpace& codomain_space) {
    require_map_matches(h, domain_space, codomain_space);
    const Mask full_u = domain_space.full_mask();
    const Mask full_v = codomain_space.full_mask();
    std::array<bool, 4> out{true, true, true, true};

    // (0) preimage of every open set is semi-alpha-open.
    for (Mask d : codomain_space.opens().members) {
        if (!is_nsalpha_open_mask(domain_space, h.preimage_mask(d))) {
            out[0] = false;
            break;
        }
    }
    // (1) preimage of every closed set is semi-alpha-closed.
    for (Mask o : codomain_space.opens().members) {
        const Mask closed = full_v & ~o;
        const Mask pre = h.preimage_mask(closed);
        if (!is_nsalpha_open_mask(domain_space, full_u & ~pre)) {
            out[1] = false;
            break;
        }
    }
    // (2) image of the interleaved hull of any domain subset stays inside the
    // closure of the image.
    for (Mask c = 0;; ++c) {
        const Mask hull = domain_space.interior_mask(domain_space.closure_mask(
            domain_space.interior_mask(domain_space.closure_mask(c))));
        const Mask lhs = h.image_mask(hull);
        const Mask rhs = codomain_space.closure_mask(h.image_mask(c));
        if ((lhs & rhs) != lhs) {
            out[2] = false;
            break;
        }
        if (c == full_u) break;
    }
    // (3) the interleaved hull of any preimage stays inside the preimage of
    // the closure.
    for (Mask d = 0;; ++d) {
        const Mask pre = h.preimage_mask(d);
        const Mask hull = domain_space.interior_mask(domain_space.closure_mask(
            domain_space.interior_mask(domain_space.closure_mask(pre))));
        const Mask rhs = h.preimage_mask(codomain_space.closure_mask(d));
        if ((hull & rhs) != hull) {
            out[3] = false;
            break;
        }
        if (d == full_v) break;
    }
    return out;
}

bool n_characterization_interior(const FiniteMap& h,
                                 const NanoSpace& domain_space,
                                 const NanoSpace& codomain_space) {
    require_map_matches(h, domain_space, codomain_space);
    const Mask full_v = codomain_space.full_mask();
    for (Mask d = 0;; ++d) {
        const Mask lhs = h.preimage_mask(codomain_space.interior_mask(d));
        const Mask rhs = domain_space.interior_mask(h.preimage_mask(d));
        if ((lhs & rhs) != lhs) return false;
        if (d == full_v) break;
    }
    return true;
}

// --- table-based fast path -------------------------------------------------

SpaceTables::SpaceTables(const NanoSpace& s)
    : n_(s.point_count()), full_(s.full_mask()) {
    const std::size_t count = std::size_t{1} << n_;
    interior_.resize(count);
    closure_.resize(count);

    // interior[a]: a itself when open, otherwise the union of the interiors
    // of a's maximal proper subsets (every open strictly inside a misses at
    // least one of a's points). Processed in increasing mask order, so all
    // proper subsets are ready.
    for (Mask a = 0; a < count; ++a) {
        if (s.is_open_mask(a)) {
            interior_[a] = a;
            continue;
        }
        Mask acc = 0;
        Mask rest = a;
        while (rest) {
            const Mask low = rest & (0u - rest);
            acc |= interior_[a & ~low];
            rest &= rest - 1;
        }
        interior_[a] = acc;
    }
    // closure[a]: dually, intersect the closures of a's minimal proper
    // supersets unless a is already closed; decreasing mask order by
    // processing supersets first via descending popcount equivalent —
    // iterating masks downward suffices because every superset of a is
    // numerically larger when formed by adding one bit.
    for (Mask a = static_cast<Mask>(count - 1);; --a) {
        if (s.is_closed_mask(a)) {
            closure_[a] = a;
        } else {
            Mask acc = full_;
            Mask missing = full_ & ~a;
            while (missing) {
                const Mask low = missing & (0u - missing);
                acc &= closure_[a | low];
                missing &= missing - 1;
            }
            closure_[a] = acc;
        }
        if (a == 0) break;
    }

    for (auto& kindbits : bits_) kindbits.assign((count + 63) / 64, 0);
    for (Mask a = 0; a < count; ++a) {
        const bool open = s.is_open_mask(a);
        const Mask alpha_hull = interior_[closure_[interior_[a]]];
        const bool alpha = (a & alpha_hull) == a;
        const Mask salpha_hull = closure_[alpha_hull];
        const bool salpha = (a & salpha_hull) == a;
        const bool flags[3] = {open, alpha, salpha};
        for (int k = 0; k < 3; ++k) {
            if (flags[k]) {
                bits_[k][a >> 6] |= std::uint64_t{1} << (a & 63);
                members_[k].push_back(a);
            }
        }
    }
    for (auto& list : members_) {
        std::sort(list.begin(), list.end(), canonical_less);
    }
}

Mask preimage_mask(std::span<const Point> assignment, Mask codomain_set) {
    Mask out = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        out |= ((codomain_set >> assignment[i]) & 1u) << i;
    }
    return out;
}

namespace {

Mask image_mask(std::span<const Point> assignment, Mask domain_set) {
    Mask out = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if ((domain_set >> i) & 1u) out |= Mask{1} << assignment[i];
    }
    return out;
}

bool kind_continuous(const SpaceTables& domain, const SpaceTables& codomain,
                     std::span<const Point> assignment, int codomain_kind,
                     int domain_kind) {
    for (Mask d : codomain.members(codomain_kind)) {
        if (!domain.in_family(domain_kind, preimage_mask(assignment, d))) {
            return false;
        }
    }
    return true;
}

}  // namespace

ContinuityProfile classify(const SpaceTables& domain,
                           const SpaceTables& codomain,
                           std::span<const Point> assignment) {
    // (codomain kind, domain kind) per class, in enum order.
    static constexpr int rules[continuity_class_count][2] = {
        {kind_n_open, kind_n_open},           // N
        {kind_n_open, kind_nalpha_open},      // Na
        {kind_nalpha_open, kind_nalpha_open}, // Na*
        {kind_nalpha_open, kind_n_open},      // Na**
        {kind_n_open, kind_nsalpha_open},     // NSa
        {kind_nsalpha_open, kind_nsalpha_open}, // NSa*
        {kind_nsalpha_open, kind_n_open},     // NSa**
    };
    ContinuityProfile out;
    for (int c = 0; c < continuity_class_count; ++c) {
        out.holds[c] =
            kind_continuous(domain, codomain, assignment, rules[c][0], rules[c][1]);
    }
    out.n_open_map = is_n_open_map(domain, codomain, assignment);
    return out;
}

bool is_n_open_map(const SpaceTables& domain, const SpaceTables& codomain,
                   std::span<const Point> assignment) {
    for (Mask o : domain.members(kind_n_open)) {
        if (!codomain.in_family(kind_n_open, image_mask(assignment, o))) {
            return false;
        }
    }
    return true;
}

std::array<bool, 4> nsalpha_characterizations(const SpaceTables& domain,
                                              const SpaceTables& codomain,
                                              std::span<const Point> assignment) {
    std::array<bool, 4> out{true, true, true, true};
    const Mask full_u = domain.full_mask();
    const Mask full_v = codomain.full_mask();

    for (Mask d : codomain.members(kind_n_open)) {
        if (!domain.in_family(kind_nsalpha_open, preimage_mask(assignment, d))) {
            out[0] = false;
            break;
        }
    }
    for (Mask o : codomain.members(kind_n_open)) {
        const Mask pre = preimage_mask(assignment, full_v & ~o);
        if (!domain.in_family(kind_nsalpha_open, full_u & ~pre)) {
            out[1] = false;
            break;
        }
    }
    for (Mask c = 0;; ++c) {
        const Mask hull =
            domain.interior(domain.closure(domain.interior(domain.closure(c))));
        const Mask lhs = image_mask(assignment, hull);
        const Mask rhs = codomain.closure(image_mask(assignment, c));
        if ((lhs & rhs) != lhs) {
            out[2] = false;
            break;
        }
        if (c == full_u) break;
    }
    for (Mask d = 0;; ++d) {
        const Mask pre = preimage_mask(assignment, d);
        const Mask hull =
            domain.interior(domain.closure(domain.interior(domain.closure(pre))));
        const Mask rhs = preimage_mask(assignment, codomain.closure(d));
        if ((hull & rhs) != hull) {
            out[3] = false;
            break;
        }
        if (d == full_v) break;
    }
    return out;
}

bool n_characterization_interior(const SpaceTables& domain,
                                 const SpaceTables& codomain,
                                 std::span<const Point> assignment) {
    const Mask full_v = codomain.full_mask();
    for (Mask d = 0;; ++d) {
        const Mask lhs = preimage_mask(assignment, codomain.interior(d));
        const Mask rhs = domain.interior(preimage_mask(assignment, d));
        if ((lhs & rhs) != lhs) return false;
        if (d == full_v) break;
    }
    return true;
}

}  // namespace nanotop
