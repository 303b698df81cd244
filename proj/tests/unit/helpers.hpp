#pragma once

#include <random>
#include <vector>

#include "nanotop/enumerate.hpp"
#include "nanotop/space.hpp"

namespace nanotop::test {

// Deterministic generator for property tests: a rough-derived space over the
// canonical universe, from a random restricted-growth string and subset.
inline NanoSpace random_space(std::mt19937_64& rng, int n) {
    std::vector<int> rgs(n, 0);
    int mx = 0;
    for (int i = 1; i < n; ++i) {
        rgs[i] = static_cast<int>(rng() % static_cast<std::uint64_t>(mx + 2));
        if (rgs[i] > mx) mx = rgs[i];
    }
    std::vector<Mask> blocks(mx + 1, 0);
    for (int i = 0; i < n; ++i) blocks[rgs[i]] |= Mask{1} << i;
    const UniversePtr u = canonical_universe(n);
    const Mask m = static_cast<Mask>(rng() % (std::uint64_t{1} << n));
    return build_nano_topology(make_partition(u, std::move(blocks)),
                               PointSet{u, m});
}

inline std::vector<Point> random_assignment(std::mt19937_64& rng, int nu,
                                            int nv) {
    std::vector<Point> a(nu);
    for (int i = 0; i < nu; ++i) {
        a[i] = static_cast<Point>(rng() % static_cast<std::uint64_t>(nv));
    }
    return a;
}

}  // namespace nanotop::test
