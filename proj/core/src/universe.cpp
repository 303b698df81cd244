#include "nanotop/universe.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace nanotop {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw std::invalid_argument("universe needs at least one point");
    }
    if (static_cast<int>(labels_.size()) > max_points) {
        throw std::invalid_argument(
            "universe of " + std::to_string(labels_.size()) +
            " points exceeds the cap of " + std::to_string(max_points));
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_) {
        if (l.empty()) {
            throw std::invalid_argument("empty point label");
        }
        if (!seen.insert(l).second) {
            throw std::invalid_argument("duplicate point label \"" + l + "\"");
        }
    }
}

std::optional<Point> Universe::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return static_cast<Point>(i);
    }
    return std::nullopt;
}

UniversePtr make_universe(std::vector<std::string> labels) {
    return std::make_shared<const Universe>(std::move(labels));
}

UniversePtr canonical_universe(int n) {
    if (n < 1 || n > Universe::max_points) {
        throw std::invalid_argument("canonical universe size out of range: " +
                                    std::to_string(n));
    }
    static std::array<UniversePtr, Universe::max_points> cache;
    static std::once_flag built;
    std::call_once(built, [] {
        for (int k = 1; k <= Universe::max_points; ++k) {
            std::vector<std::string> labels;
            labels.reserve(k);
            for (int i = 1; i <= k; ++i) labels.push_back("p" + std::to_string(i));
            cache[k - 1] = make_universe(std::move(labels));
        }
    });
    return cache[n - 1];
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->labels() == b->labels();
}

std::vector<std::string> PointSet::labels() const {
    std::vector<std::string> out;
    for (int i = 0; i < universe->size(); ++i) {
        if (contains(static_cast<Point>(i))) out.push_back(universe->label(i));
    }
    return out;
}

PointSet set_of(const UniversePtr& u, Mask bits) {
    if (!u) throw std::invalid_argument("null universe");
    if (bits & ~u->full_mask()) {
        throw std::invalid_argument("set has members outside its universe");
    }
    return PointSet{u, bits};
}

PointSet set_from_labels(const UniversePtr& u,
                         const std::vector<std::string>& labels) {
    Mask bits = 0;
    for (const auto& l : labels) {
        auto p = u->find(l);
        if (!p) throw std::invalid_argument("unknown point label \"" + l + "\"");
        bits |= Mask{1} << *p;
    }
    return PointSet{u, bits};
}

PointSet empty_set(const UniversePtr& u) { return set_of(u, 0); }

PointSet full_set(const UniversePtr& u) { return set_of(u, u->full_mask()); }

PointSet complement(const PointSet& a) {
    return PointSet{a.universe, a.universe->full_mask() & ~a.bits};
}

std::string set_to_string(const UniversePtr& u, Mask bits) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < u->size(); ++i) {
        if ((bits >> i) & 1u) {
            if (!first) out += ",";
            out += u->label(static_cast<Point>(i));
            first = false;
        }
    }
    out += "}";
    return out;
}

}  // namespace nanotop
