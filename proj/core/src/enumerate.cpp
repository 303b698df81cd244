#include "nanotop/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nanotop/partition.hpp"

namespace nanotop {

std::string_view space_mode_name(SpaceMode m) {
    switch (m) {
        case SpaceMode::nano: return "nano";
        case SpaceMode::explicit_: return "explicit";
        case SpaceMode::both: return "both";
    }
    return "?";
}

std::vector<std::vector<Mask>> partitions_of(int n) {
    if (n < 1 || n > Universe::max_points) {
        throw std::invalid_argument("partition enumeration size out of range");
    }
    std::vector<std::vector<Mask>> out;
    // Restricted growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
    // Generated recursively in lexicographic order; a[i] = b assigns point i
    // to block b, so blocks come out ordered by smallest element.
    std::vector<int> rgs(n, 0);
    auto emit = [&] {
        const int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<Mask> blocks(nblocks, 0);
        for (int i = 0; i < n; ++i) blocks[rgs[i]] |= Mask{1} << i;
        out.push_back(std::move(blocks));
    };
    auto rec = [&](auto&& self, int i, int mx) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(mx, v));
        }
    };
    rec(rec, 1, 0);
    return out;
}

std::vector<NanoSpace> enumerate_nano_spaces(int n) {
    const UniversePtr u = canonical_universe(n);
    std::vector<NanoSpace> out;
    for (auto& blocks : partitions_of(n)) {
        const Partition p = make_partition(u, blocks);
        const Mask full = u->full_mask();
        for (Mask m = 0;; ++m) {
            out.push_back(build_nano_topology(p, PointSet{u, m}));
            if (m == full) break;
        }
    }
    return out;
}

std::vector<NanoSpace> enumerate_explicit_spaces(int n) {
    if (n < 1) throw std::invalid_argument("size must be positive");
    if (n > 4) {
        throw std::invalid_argument(
            "explicit-topology enumeration supported up to 4 points");
    }
    const UniversePtr u = canonical_universe(n);
    const Mask full = u->full_mask();
    // Candidate families: any subset of the proper nonempty subsets, plus
    // the mandatory empty and full sets, filtered by the topology axioms.
    std::vector<Mask> proper;
    for (Mask m = 1; m < full; ++m) proper.push_back(m);
    const std::uint32_t combos = std::uint32_t{1} << proper.size();

    std::vector<NanoSpace> out;
    std::vector<Mask> members;
    for (std::uint32_t pick = 0; pick < combos; ++pick) {
        members.clear();
        members.push_back(0);
        for (std::size_t i = 0; i < proper.size(); ++i) {
            if ((pick >> i) & 1u) members.push_back(proper[i]);
        }
        members.push_back(full);
        bool closed = true;
        for (std::size_t i = 0; i < members.size() && closed; ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const Mask un = members[i] | members[j];
                const Mask in = members[i] & members[j];
                if (std::find(members.begin(), members.end(), un) ==
                        members.end() ||
                    std::find(members.begin(), members.end(), in) ==
                        members.end()) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) {
            out.push_back(
                NanoSpace(u, make_family(u, members), std::nullopt));
        }
    }
    return out;
}

std::vector<NanoSpace> enumerate_spaces(int n, SpaceMode mode) {
    switch (mode) {
        case SpaceMode::nano:
            return enumerate_nano_spaces(n);
        case SpaceMode::explicit_:
            return enumerate_explicit_spaces(n);
        case SpaceMode::both: {
            std::vector<NanoSpace> out = enumerate_nano_spaces(n);
            std::vector<NanoSpace> ex = enumerate_explicit_spaces(n);
            out.insert(out.end(), std::make_move_iterator(ex.begin()),
                       std::make_move_iterator(ex.end()));
            return out;
        }
    }
    throw std::invalid_argument("bad space mode");
}

std::uint64_t map_count(int domain_size, int codomain_size) {
    std::uint64_t count = 1;
    for (int i = 0; i < domain_size; ++i) {
        count *= static_cast<std::uint64_t>(codomain_size);
    }
    return count;
}

std::vector<Point> map_assignment_from_counter(std::uint64_t k, int domain_size,
                                               int codomain_size) {
    std::vector<Point> assign(domain_size);
    for (int i = 0; i < domain_size; ++i) {
        assign[i] = static_cast<Point>(k % codomain_size);
        k /= codomain_size;
    }
    return assign;
}

std::vector<FiniteMap> enumerate_maps(const UniversePtr& domain,
                                      const UniversePtr& codomain,
                                      bool bijective_only) {
    if (bijective_only && domain->size() != codomain->size()) {
        throw std::invalid_argument(
            "bijection enumeration needs equal universe sizes");
    }
    std::vector<FiniteMap> out;
    const std::uint64_t total = map_count(domain->size(), codomain->size());
    for (std::uint64_t k = 0; k < total; ++k) {
        FiniteMap h(domain, codomain,
                    map_assignment_from_counter(k, domain->size(),
                                                codomain->size()));
        if (bijective_only && !h.bijective()) continue;
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace nanotop
