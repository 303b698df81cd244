#pragma once

#include <optional>
#include <tuple>

#include "nanotop/family.hpp"
#include "nanotop/partition.hpp"
#include "nanotop/universe.hpp"

namespace nanotop {

// Lower/upper approximation and boundary region of a subset with respect to
// a partition: lower = union of blocks inside the subset, upper = union of
// blocks meeting it, boundary = upper minus lower.
struct Approximations {
    PointSet lower;
    PointSet upper;
    PointSet boundary;
};

Approximations approximations(const Partition& p, const PointSet& m);

// How a space was obtained when it came from rough-set data; retained for
// reporting and for round-tripping the text format.
struct RoughProvenance {
    Partition partition;
    Mask subset;    // the approximated set M
    Mask lower;
    Mask upper;
    Mask boundary;
};

// A finite topological space: validated open-set family over a universe,
// optionally carrying the rough-set provenance that generated it.
class NanoSpace {
public:
    NanoSpace(UniversePtr u, SetFamily opens,
              std::optional<RoughProvenance> provenance);

    const UniversePtr& universe() const noexcept { return universe_; }
    const SetFamily& opens() const noexcept { return opens_; }
    const std::optional<RoughProvenance>& provenance() const noexcept {
        return provenance_;
    }
    bool is_rough_derived() const noexcept { return provenance_.has_value(); }

    int point_count() const noexcept { return universe_->size(); }
    Mask full_mask() const noexcept { return universe_->full_mask(); }

    bool is_open_mask(Mask a) const { return opens_.contains(a); }
    bool is_closed_mask(Mask a) const {
        return opens_.contains(full_mask() & ~a);
    }

    // Largest open subset of a: union of all opens contained in a.
    Mask interior_mask(Mask a) const;
    // Smallest closed superset of a: intersection of all closed sets over a.
    Mask closure_mask(Mask a) const;

    friend bool operator==(const NanoSpace& a, const NanoSpace& b) {
        return a.opens_ == b.opens_;
    }

private:
    UniversePtr universe_;
    SetFamily opens_;
    std::optional<RoughProvenance> provenance_;
};

// The topology generated by rough approximation: dedup{empty, U, lower,
// upper, boundary}. Always a valid topology of 2..5 members.
NanoSpace build_nano_topology(const Partition& p, const PointSet& m);

// Accepts any family satisfying the finite topology axioms (empty and full
// present; closed under pairwise union and intersection); no provenance.
// Throws std::invalid_argument naming the first offending member pair.
NanoSpace make_explicit_space(const UniversePtr& u, SetFamily opens);

PointSet n_interior(const NanoSpace& s, const PointSet& a);
PointSet n_closure(const NanoSpace& s, const PointSet& a);

}  // namespace nanotop
