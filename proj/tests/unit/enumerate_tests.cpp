#include <doctest.h>

#include <algorithm>

#include "nanotop/enumerate.hpp"

using namespace nanotop;

TEST_CASE("partition counts follow the Bell numbers") {
    const std::size_t expected[] = {1, 2, 5, 15, 52, 203};
    for (int n = 1; n <= 6; ++n) {
        CHECK(partitions_of(n).size() == expected[n - 1]);
    }
    CHECK_THROWS_AS(partitions_of(0), std::invalid_argument);
    CHECK_THROWS_AS(partitions_of(17), std::invalid_argument);
}

TEST_CASE("partitions come in restricted-growth order, blocks by least point") {
    const auto parts = partitions_of(3);
    REQUIRE(parts.size() == 5);
    CHECK(parts[0] == std::vector<Mask>{0b111});
    CHECK(parts[1] == std::vector<Mask>{0b011, 0b100});
    CHECK(parts[2] == std::vector<Mask>{0b101, 0b010});
    CHECK(parts[3] == std::vector<Mask>{0b001, 0b110});
    CHECK(parts[4] == std::vector<Mask>{0b001, 0b010, 0b100});
}

TEST_CASE("rough-derived space enumeration: counts and order") {
    const std::size_t expected[] = {2, 8, 40, 240, 1664};
    for (int n = 1; n <= 5; ++n) {
        CHECK(enumerate_nano_spaces(n).size() == expected[n - 1]);
    }
    const auto spaces = enumerate_nano_spaces(2);
    REQUIRE(spaces.size() == 8);
    // Partition index is the major counter, subset mask the minor one.
    for (int i = 0; i < 8; ++i) {
        REQUIRE(spaces[i].is_rough_derived());
        CHECK(spaces[i].provenance()->subset == static_cast<Mask>(i % 4));
    }
    CHECK(spaces[0].provenance()->partition.blocks ==
          std::vector<Mask>{0b11});
    CHECK(spaces[4].provenance()->partition.blocks ==
          std::vector<Mask>{0b01, 0b10});
    // Subset immaterial under the one-block partition: indiscrete unless the
    // subset is a nonempty proper cut, which cannot happen blockwise here.
    CHECK(spaces[0].opens().size() == 2);
    // Discrete partition, subset {p1}: lower = upper = {p1}, so the opens
    // collapse to {}, {p1}, U.
    CHECK(spaces[5].opens().size() == 3);
}

TEST_CASE("explicit topology enumeration: counts, shape, bounds") {
    const std::size_t expected[] = {1, 4, 29, 355};
    for (int n = 1; n <= 4; ++n) {
        const auto spaces = enumerate_explicit_spaces(n);
        CHECK(spaces.size() == expected[n - 1]);
        CHECK(std::none_of(spaces.begin(), spaces.end(),
                           [](const NanoSpace& s) {
                               return s.is_rough_derived();
                           }));
        // First family in counter order is the indiscrete topology; the
        // all-subsets family comes last and is discrete.
        CHECK(spaces.front().opens().size() == 2);
        CHECK(spaces.back().opens().size() == (1u << n));
    }
    CHECK_THROWS_WITH_AS(enumerate_explicit_spaces(5),
                         "explicit-topology enumeration supported up to 4 points",
                         std::invalid_argument);
}

TEST_CASE("mode selection concatenates nano before explicit") {
    const auto nano = enumerate_spaces(3, SpaceMode::nano);
    const auto expl = enumerate_spaces(3, SpaceMode::explicit_);
    const auto both = enumerate_spaces(3, SpaceMode::both);
    CHECK(nano.size() == 40);
    CHECK(expl.size() == 29);
    REQUIRE(both.size() == 69);
    CHECK(both.front() == nano.front());
    CHECK(both[39] == nano[39]);
    CHECK(both[40] == expl[0]);
    CHECK(both.back() == expl.back());
    CHECK(space_mode_name(SpaceMode::nano) == "nano");
    CHECK(space_mode_name(SpaceMode::explicit_) == "explicit");
    CHECK(space_mode_name(SpaceMode::both) == "both");
}

TEST_CASE("map counting and counter decoding") {
    CHECK(map_count(2, 3) == 9);
    CHECK(map_count(3, 1) == 1);
    CHECK(map_count(4, 4) == 256);
    CHECK(map_count(16, 2) == 65536);
    // Domain point 0 is the least significant base-|V| digit.
    CHECK(map_assignment_from_counter(0, 3, 2) ==
          std::vector<Point>{0, 0, 0});
    CHECK(map_assignment_from_counter(5, 3, 2) ==
          std::vector<Point>{1, 0, 1});
    CHECK(map_assignment_from_counter(7, 2, 3) == std::vector<Point>{1, 2});
}

TEST_CASE("map enumeration in counter order, with bijection filtering") {
    const UniversePtr u = canonical_universe(2);
    const UniversePtr v = canonical_universe(3);
    const auto maps = enumerate_maps(u, v, false);
    REQUIRE(maps.size() == 9);
    CHECK(maps[0].assignment() == std::vector<Point>{0, 0});
    CHECK(maps[1].assignment() == std::vector<Point>{1, 0});
    CHECK(maps[3].assignment() == std::vector<Point>{0, 1});
    CHECK(maps[8].assignment() == std::vector<Point>{2, 2});
    for (std::size_t k = 0; k < maps.size(); ++k) {
        CHECK(maps[k].assignment() == map_assignment_from_counter(k, 2, 3));
    }

    const UniversePtr w = canonical_universe(3);
    const auto bij = enumerate_maps(w, w, true);
    CHECK(bij.size() == 6);
    CHECK(std::all_of(bij.begin(), bij.end(),
                      [](const FiniteMap& h) { return h.bijective(); }));
    // Counter order, not lexicographic-permutation order: the permutation
    // with the smallest base-3 counter value (2 + 3*1 + 9*0) comes first.
    CHECK(bij.front().assignment() == std::vector<Point>{2, 1, 0});
    CHECK_THROWS_WITH_AS(enumerate_maps(u, v, true),
                         "bijection enumeration needs equal universe sizes",
                         std::invalid_argument);
}
