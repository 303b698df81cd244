#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nanotop/universe.hpp"

namespace nanotop {

// A total function between two universes, stored as one codomain index per
// domain point. Immutable after construction.
class FiniteMap {
public:
    FiniteMap(UniversePtr domain, UniversePtr codomain,
              std::vector<Point> assignment);

    const UniversePtr& domain() const noexcept { return domain_; }
    const UniversePtr& codomain() const noexcept { return codomain_; }
    const std::vector<Point>& assignment() const noexcept { return assign_; }
    Point apply(Point p) const { return assign_.at(p); }

    bool injective() const noexcept;
    bool surjective() const noexcept;
    bool bijective() const noexcept { return injective() && surjective(); }

    // {x : h(x) in b} / {h(x) : x in a}, as raw masks.
    Mask preimage_mask(Mask b) const noexcept;
    Mask image_mask(Mask a) const noexcept;

    // "r1->s2 r2->s2 ..." in domain point order.
    std::string arrows_string() const;

    friend bool operator==(const FiniteMap& a, const FiniteMap& b) {
        return a.assign_ == b.assign_ && same_universe(a.domain_, b.domain_) &&
               same_universe(a.codomain_, b.codomain_);
    }

private:
    UniversePtr domain_;
    UniversePtr codomain_;
    std::vector<Point> assign_;
};

// Builds from label arrows; every domain label must be mapped exactly once
// and every target label must exist. Throws std::invalid_argument.
FiniteMap make_map(const UniversePtr& domain, const UniversePtr& codomain,
                   const std::vector<std::pair<std::string, std::string>>& arrows);

FiniteMap make_map_by_index(const UniversePtr& domain,
                            const UniversePtr& codomain,
                            std::vector<Point> assignment);

FiniteMap identity_map(const UniversePtr& u);

// h2 after h1; requires h1's codomain to equal h2's domain.
FiniteMap compose(const FiniteMap& h2, const FiniteMap& h1);

PointSet preimage(const FiniteMap& h, const PointSet& b);
PointSet image(const FiniteMap& h, const PointSet& a);

}  // namespace nanotop
