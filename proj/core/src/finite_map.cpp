#include "nanotop/finite_map.hpp"

#include <stdexcept>

namespace nanotop {

FiniteMap::FiniteMap(UniversePtr domain, UniversePtr codomain,
                     std::vector<Point> assignment)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      assign_(std::move(assignment)) {
    if (!domain_ || !codomain_) throw std::invalid_argument("null universe");
    if (static_cast<int>(assign_.size()) != domain_->size()) {
        throw std::invalid_argument("map must assign every domain point");
    }
    for (Point t : assign_) {
        if (static_cast<int>(t) >= codomain_->size()) {
            throw std::invalid_argument("map target index out of range");
        }
    }
}

bool FiniteMap::injective() const noexcept {
    Mask seen = 0;
    for (Point t : assign_) {
        const Mask bit = Mask{1} << t;
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

bool FiniteMap::surjective() const noexcept {
    Mask seen = 0;
    for (Point t : assign_) seen |= Mask{1} << t;
    return seen == codomain_->full_mask();
}

Mask FiniteMap::preimage_mask(Mask b) const noexcept {
    Mask out = 0;
    for (std::size_t i = 0; i < assign_.size(); ++i) {
        out |= ((b >> assign_[i]) & 1u) << i;
    }
    return out;
}

Mask FiniteMap::image_mask(Mask a) const noexcept {
    Mask out = 0;
    for (std::size_t i = 0; i < assign_.size(); ++i) {
        if ((a >> i) & 1u) out |= Mask{1} << assign_[i];
    }
    return out;
}

std::string FiniteMap::arrows_string() const {
    std::string out;
    for (std::size_t i = 0; i < assign_.size(); ++i) {
        if (i) out += " ";
        out += domain_->label(static_cast<Point>(i));
        out += "->";
        out += codomain_->label(assign_[i]);
    }
    return out;
}

FiniteMap make_map(
    const UniversePtr& domain, const UniversePtr& codomain,
    const std::vector<std::pair<std::string, std::string>>& arrows) {
    if (!domain || !codomain) throw std::invalid_argument("null universe");
    std::vector<Point> assign(domain->size(), 0);
    std::vector<bool> given(domain->size(), false);
    for (const auto& [from, to] : arrows) {
        auto p = domain->find(from);
        if (!p) {
            throw std::invalid_argument("unknown source label \"" + from + "\"");
        }
        auto q = codomain->find(to);
        if (!q) {
            throw std::invalid_argument("unknown target label \"" + to + "\"");
        }
        if (given[*p]) {
            throw std::invalid_argument("source point \"" + from +
                                        "\" mapped more than once");
        }
        given[*p] = true;
        assign[*p] = *q;
    }
    for (int i = 0; i < domain->size(); ++i) {
        if (!given[i]) {
            throw std::invalid_argument("map is not total: no arrow for \"" +
                                        domain->label(i) + "\"");
        }
    }
    return FiniteMap(domain, codomain, std::move(assign));
}

FiniteMap make_map_by_index(const UniversePtr& domain,
                            const UniversePtr& codomain,
                            std::vector<Point> assignment) {
    return FiniteMap(domain, codomain, std::move(assignment));
}

FiniteMap identity_map(const UniversePtr& u) {
    if (!u) throw std::invalid_argument("null universe");
    std::vector<Point> assign(u->size());
    for (int i = 0; i < u->size(); ++i) assign[i] = static_cast<Point>(i);
    return FiniteMap(u, u, std::move(assign));
}

FiniteMap compose(const FiniteMap& h2, const FiniteMap& h1) {
    if (!same_universe(h1.codomain(), h2.domain())) {
        throw std::invalid_argument(
            "compose: inner codomain differs from outer domain");
    }
    std::vector<Point> assign;
    assign.reserve(h1.assignment().size());
    for (Point mid : h1.assignment()) assign.push_back(h2.apply(mid));
    return FiniteMap(h1.domain(), h2.codomain(), std::move(assign));
}

PointSet preimage(const FiniteMap& h, const PointSet& b) {
    if (!same_universe(h.codomain(), b.universe)) {
        throw std::invalid_argument("preimage: set is not over the codomain");
    }
    return PointSet{h.domain(), h.preimage_mask(b.bits)};
}

PointSet image(const FiniteMap& h, const PointSet& a) {
    if (!same_universe(h.domain(), a.universe)) {
        throw std::invalid_argument("image: set is not over the domain");
    }
    return PointSet{h.codomain(), h.image_mask(a.bits)};
}

}  // namespace nanotop
