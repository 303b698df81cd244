#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "nanotop/enumerate.hpp"
#include "nanotop/partition.hpp"
#include "nanotop/space.hpp"

using namespace nanotop;

namespace {

bool is_topology(const SetFamily& f, Mask full) {
    if (!f.contains(0) || !f.contains(full)) return false;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        for (std::size_t j = i + 1; j < f.members.size(); ++j) {
            if (!f.contains(f.members[i] | f.members[j])) return false;
            if (!f.contains(f.members[i] & f.members[j])) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("partition validation names the failure") {
    const UniversePtr u = make_universe({"a", "b"});
    CHECK_THROWS_AS(make_partition(u, {0b01}), std::invalid_argument);   // gap
    CHECK_THROWS_AS(make_partition(u, {0b01, 0b11}),                     // overlap
                    std::invalid_argument);
    CHECK_THROWS_AS(make_partition(u, {0b01, 0, 0b10}),                  // empty block
                    std::invalid_argument);
    CHECK(make_partition(u, {0b01, 0b10}).block_count() == 2);
    CHECK(make_partition(u, {0b11}).block_count() == 1);
}

TEST_CASE("approximations: lower, upper, boundary") {
    // Four points, classes {r1} {r3} {r2 r4}, subset {r1, r2}: the only
    // class inside the subset is {r1}; classes meeting it are {r1} and
    // {r2 r4}.
    const UniversePtr u = make_universe({"r1", "r2", "r3", "r4"});
    const Partition p =
        partition_from_labels(u, {{"r1"}, {"r3"}, {"r2", "r4"}});
    const Approximations ap = approximations(p, set_from_labels(u, {"r1", "r2"}));
    CHECK(ap.lower.labels() == std::vector<std::string>{"r1"});
    CHECK(ap.upper.labels() == std::vector<std::string>{"r1", "r2", "r4"});
    CHECK(ap.boundary.labels() == std::vector<std::string>{"r2", "r4"});
}

TEST_CASE("approximation edge cases") {
    const UniversePtr u = make_universe({"a", "b", "c"});
    const Partition p = partition_from_labels(u, {{"a", "b"}, {"c"}});

    SUBCASE("empty subset") {
        const Approximations ap = approximations(p, empty_set(u));
        CHECK(ap.lower.empty());
        CHECK(ap.upper.empty());
        CHECK(ap.boundary.empty());
    }
    SUBCASE("full subset") {
        const Approximations ap = approximations(p, full_set(u));
        CHECK(ap.lower.bits == u->full_mask());
        CHECK(ap.upper.bits == u->full_mask());
        CHECK(ap.boundary.empty());
    }
    SUBCASE("subset cutting across a class") {
        const Approximations ap = approximations(p, set_from_labels(u, {"a"}));
        CHECK(ap.lower.empty());
        CHECK(ap.upper.labels() == std::vector<std::string>{"a", "b"});
        CHECK(ap.boundary.labels() == std::vector<std::string>{"a", "b"});
    }
}

TEST_CASE("generated topology has two to five members and keeps provenance") {
    const UniversePtr u = make_universe({"r1", "r2", "r3", "r4"});
    const Partition p =
        partition_from_labels(u, {{"r1"}, {"r3"}, {"r2", "r4"}});
    const NanoSpace s =
        build_nano_topology(p, set_from_labels(u, {"r1", "r2"}));
    CHECK(s.opens().size() == 5);
    CHECK(s.is_rough_derived());
    CHECK(s.provenance()->subset == 0b0011);
    CHECK(s.provenance()->lower == 0b0001);
    CHECK(s.provenance()->upper == 0b1011);
    CHECK(s.provenance()->boundary == 0b1010);
    CHECK(s.is_open_mask(0));
    CHECK(s.is_open_mask(u->full_mask()));
    CHECK(s.is_open_mask(0b0001));
    CHECK(s.is_open_mask(0b1010));
    CHECK(s.is_open_mask(0b1011));
    CHECK_FALSE(s.is_open_mask(0b0010));
}

TEST_CASE("degenerate generated topologies") {
    const UniversePtr u = make_universe({"a", "b"});
    // Lower = upper = subset: three members collapse to {empty, subset, full}.
    const Partition discrete = partition_from_labels(u, {{"a"}, {"b"}});
    CHECK(build_nano_topology(discrete, set_from_labels(u, {"a"}))
              .opens()
              .size() == 3);
    // Empty subset: both approximations empty -> {empty, full}.
    CHECK(build_nano_topology(discrete, empty_set(u)).opens().size() == 2);
    // One indiscernible class, proper subset: lower empty, upper full.
    const Partition lump = partition_from_labels(u, {{"a", "b"}});
    CHECK(build_nano_topology(lump, set_from_labels(u, {"a"})).opens().size() ==
          2);
}

TEST_CASE("every enumerated rough-derived space is a topology") {
    for (int n = 1; n <= 4; ++n) {
        for (const NanoSpace& s : enumerate_nano_spaces(n)) {
            CAPTURE(n);
            REQUIRE(is_topology(s.opens(), s.full_mask()));
            REQUIRE(s.opens().size() >= 2);
            REQUIRE(s.opens().size() <= 5);
            const RoughProvenance& rp = *s.provenance();
            REQUIRE((rp.lower & rp.subset) == rp.lower);   // L inside M
            REQUIRE((rp.subset & rp.upper) == rp.subset);  // M inside Upp
            REQUIRE(rp.boundary == (rp.upper & ~rp.lower));
        }
    }
}

TEST_CASE("explicit space construction checks the axioms") {
    const UniversePtr u = make_universe({"a", "b", "c"});
    CHECK_THROWS_AS(  // missing empty set
        make_explicit_space(u, make_family(u, {0b111, 0b001})),
        std::invalid_argument);
    CHECK_THROWS_AS(  // missing full set
        make_explicit_space(u, make_family(u, {0, 0b001})),
        std::invalid_argument);
    CHECK_THROWS_AS(  // union {a,b} missing
        make_explicit_space(u, make_family(u, {0, 0b001, 0b010, 0b111})),
        std::invalid_argument);
    const NanoSpace s =
        make_explicit_space(u, make_family(u, {0, 0b001, 0b011, 0b111}));
    CHECK_FALSE(s.is_rough_derived());
    CHECK(s.opens().size() == 4);
}

TEST_CASE("interior and closure operators: laws") {
    std::mt19937_64 rng(7);
    auto check_space = [](const NanoSpace& s) {
        const Mask full = s.full_mask();
        for (Mask a = 0;; ++a) {
            const Mask ia = s.interior_mask(a);
            const Mask ca = s.closure_mask(a);
            REQUIRE((ia & a) == ia);                        // int(a) inside a
            REQUIRE((a & ca) == a);                         // a inside cl(a)
            REQUIRE(s.is_open_mask(ia));
            REQUIRE(s.is_closed_mask(ca));
            REQUIRE(s.interior_mask(ia) == ia);             // idempotent
            REQUIRE(s.closure_mask(ca) == ca);
            REQUIRE(ca == (full & ~s.interior_mask(full & ~a)));  // duality
            if (a == full) break;
        }
        // Monotonicity over all nested pairs.
        for (Mask a = 0;; ++a) {
            for (Mask b = a;; b = (b + 1) | a) {  // all supersets of a
                REQUIRE((s.interior_mask(a) & s.interior_mask(b)) ==
                        s.interior_mask(a));
                REQUIRE((s.closure_mask(a) & s.closure_mask(b)) ==
                        s.closure_mask(a));
                if (b == full) break;
            }
            if (a == full) break;
        }
    };
    for (int n = 1; n <= 3; ++n) {
        for (const NanoSpace& s : enumerate_spaces(n, SpaceMode::both)) {
            check_space(s);
        }
    }
    for (int i = 0; i < 25; ++i) check_space(test::random_space(rng, 5));
}
