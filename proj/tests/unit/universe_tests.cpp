#include <doctest.h>

#include "nanotop/universe.hpp"

using namespace nanotop;

TEST_CASE("universe basics: size, labels, lookup") {
    const UniversePtr u = make_universe({"r1", "r2", "r3", "r4"});
    CHECK(u->size() == 4);
    CHECK(u->full_mask() == 0b1111);
    CHECK(u->label(0) == "r1");
    CHECK(u->find("r3") == Point{2});
    CHECK_FALSE(u->find("r5").has_value());
}

TEST_CASE("universe validation") {
    CHECK_THROWS_AS(make_universe({}), std::invalid_argument);
    CHECK_THROWS_AS(make_universe({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(make_universe({""}), std::invalid_argument);
    std::vector<std::string> too_many;
    for (int i = 0; i < 17; ++i) too_many.push_back("x" + std::to_string(i));
    CHECK_THROWS_AS(make_universe(too_many), std::invalid_argument);
    // Exactly at the cap is fine.
    too_many.pop_back();
    CHECK(make_universe(too_many)->size() == 16);
}

TEST_CASE("canonical universe is cached and labeled p1..pn") {
    const UniversePtr a = canonical_universe(3);
    const UniversePtr b = canonical_universe(3);
    CHECK(a.get() == b.get());
    CHECK(a->labels() == std::vector<std::string>{"p1", "p2", "p3"});
}

TEST_CASE("same_universe is extensional") {
    const UniversePtr a = make_universe({"x", "y"});
    const UniversePtr b = make_universe({"x", "y"});
    const UniversePtr c = make_universe({"y", "x"});
    CHECK(same_universe(a, b));
    CHECK_FALSE(same_universe(a, c));  // order matters
}

TEST_CASE("point sets: construction, labels, complement, rendering") {
    const UniversePtr u = make_universe({"r1", "r2", "r3", "r4"});
    const PointSet s = set_from_labels(u, {"r2", "r4"});
    CHECK(s.bits == 0b1010);
    CHECK(s.labels() == std::vector<std::string>{"r2", "r4"});
    CHECK(complement(s).bits == 0b0101);
    CHECK(set_to_string(u, s.bits) == "{r2,r4}");
    CHECK(set_to_string(u, 0) == "{}");
    CHECK(empty_set(u).empty());
    CHECK(full_set(u).bits == u->full_mask());
    CHECK_THROWS_AS(set_from_labels(u, {"zz"}), std::invalid_argument);
}
