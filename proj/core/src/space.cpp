#include "nanotop/space.hpp"

#include <stdexcept>

namespace nanotop {

namespace {

void require_same_universe(const UniversePtr& a, const UniversePtr& b,
                           const char* what) {
    if (!same_universe(a, b)) {
        throw std::invalid_argument(std::string(what) +
                                    ": universes do not match");
    }
}

}  // namespace

Approximations approximations(const Partition& p, const PointSet& m) {
    require_same_universe(p.universe, m.universe, "approximations");
    Mask lower = 0;
    Mask upper = 0;
    for (Mask b : p.blocks) {
        if ((b & m.bits) == b) lower |= b;
        if ((b & m.bits) != 0) upper |= b;
    }
    return Approximations{
        PointSet{p.universe, lower},
        PointSet{p.universe, upper},
        PointSet{p.universe, static_cast<Mask>(upper & ~lower)},
    };
}

NanoSpace::NanoSpace(UniversePtr u, SetFamily opens,
                     std::optional<RoughProvenance> provenance)
    : universe_(std::move(u)),
      opens_(std::move(opens)),
      provenance_(std::move(provenance)) {}

Mask NanoSpace::interior_mask(Mask a) const {
    Mask acc = 0;
    for (Mask o : opens_.members) {
        if ((o & a) == o) acc |= o;
    }
    return acc;
}

Mask NanoSpace::closure_mask(Mask a) const {
    const Mask full = full_mask();
    Mask acc = full;
    for (Mask o : opens_.members) {
        const Mask closed = full & ~o;
        if ((a & closed) == a) acc &= closed;
    }
    return acc;
}

NanoSpace build_nano_topology(const Partition& p, const PointSet& m) {
    const Approximations ap = approximations(p, m);
    const UniversePtr& u = p.universe;
    SetFamily opens = make_family(
        u, {Mask{0}, u->full_mask(), ap.lower.bits, ap.upper.bits,
            ap.boundary.bits});
    RoughProvenance prov{p, m.bits, ap.lower.bits, ap.upper.bits,
                         ap.boundary.bits};
    return NanoSpace(u, std::move(opens), std::move(prov));
}

NanoSpace make_explicit_space(const UniversePtr& u, SetFamily opens) {
    if (!u) throw std::invalid_argument("null universe");
    require_same_universe(u, opens.universe, "make_explicit_space");
    if (!opens.contains(0)) {
        throw std::invalid_argument("open family lacks the empty set");
    }
    if (!opens.contains(u->full_mask())) {
        throw std::invalid_argument("open family lacks the full universe");
    }
    const auto& mem = opens.members;
    for (std::size_t i = 0; i < mem.size(); ++i) {
        for (std::size_t j = i + 1; j < mem.size(); ++j) {
            if (!opens.contains(mem[i] | mem[j])) {
                throw std::invalid_argument(
                    "not a topology: union of " + set_to_string(u, mem[i]) +
                    " and " + set_to_string(u, mem[j]) + " is missing");
            }
            if (!opens.contains(mem[i] & mem[j])) {
                throw std::invalid_argument(
                    "not a topology: intersection of " +
                    set_to_string(u, mem[i]) + " and " +
                    set_to_string(u, mem[j]) + " is missing");
            }
        }
    }
    return NanoSpace(u, std::move(opens), std::nullopt);
}

PointSet n_interior(const NanoSpace& s, const PointSet& a) {
    require_same_universe(s.universe(), a.universe, "n_interior");
    return PointSet{s.universe(), s.interior_mask(a.bits)};
}

PointSet n_closure(const NanoSpace& s, const PointSet& a) {
    require_same_universe(s.universe(), a.universe, "n_closure");
    return PointSet{s.universe(), s.closure_mask(a.bits)};
}

}  // namespace nanotop
