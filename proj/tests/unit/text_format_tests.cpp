#include <doctest.h>

#include <random>
#include <string>

#include "helpers.hpp"
#include "nanotop/enumerate.hpp"
#include "nanotop/text_format.hpp"

using namespace nanotop;

namespace {

// Doctest's THROWS_WITH needs the full message; for line-number checks we
// want both pieces, so catch manually.
template <class Fn>
ParseError capture_parse_error(Fn&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, "unreachable");
}

}  // namespace

TEST_CASE("parsing a rough-derived space file") {
    const std::string text =
        "# approximation data\n"
        "\n"
        "points: r1 r2 r3 r4   # four objects\n"
        "classes: [r1] [r3] [r2 r4]\n"
        "subset: r1 r2\n";
    const NanoSpace s = parse_space_text(text);
    REQUIRE(s.is_rough_derived());
    CHECK(s.universe()->labels() ==
          std::vector<std::string>{"r1", "r2", "r3", "r4"});
    CHECK(s.provenance()->subset == 0b0011);
    CHECK(s.provenance()->lower == 0b0001);
    CHECK(s.provenance()->upper == 0b1011);
    CHECK(s.opens().size() == 5);
}

TEST_CASE("parsing explicit open families") {
    const NanoSpace one = parse_space_text("points: a\nopens: [] [*]\n");
    CHECK_FALSE(one.is_rough_derived());
    CHECK(one.opens().members == std::vector<Mask>{0, 1});

    const NanoSpace s =
        parse_space_text("points: 1 2 3 4\nopens: [] [3] [1 3] [1 2 3] [*]\n");
    CHECK(s.opens().members ==
          std::vector<Mask>{0, 0b0100, 0b0101, 0b0111, 0b1111});
}

TEST_CASE("space parse errors carry the offending line") {
    auto err = [](const std::string& text) {
        return capture_parse_error([&] { parse_space_text(text); });
    };

    ParseError e = err("points r1 r2\n");
    CHECK(e.line() == 1);
    CHECK(e.what() == std::string("line 1: expected 'key: value'"));

    e = err("# only comments\n\n");
    CHECK(e.what() == std::string("line 1: missing 'points:' line"));

    e = err("points: a b\ncolor: red\n");
    CHECK(e.what() == std::string("line 2: unknown key 'color'"));

    e = err("points: a\npoints: b\n");
    CHECK(e.what() == std::string("line 2: duplicate key 'points'"));

    e = err("points: a a\n");
    CHECK(e.line() == 1);  // universe validation reported on the points line

    e = err("points: a b\nclasses: [a] [b]\n");
    CHECK(e.what() == std::string("line 2: 'classes:' requires a 'subset:' line"));

    e = err("points: a b\nsubset: a\n");
    CHECK(e.what() == std::string("line 2: 'subset:' requires a 'classes:' line"));

    e = err("points: a b\nclasses: [a] [b]\nsubset: a\nopens: [] [*]\n");
    CHECK(e.what() ==
          std::string("line 4: give either classes+subset or opens, not both"));

    e = err("points: a b\n");
    CHECK(e.what() ==
          std::string("line 1: missing 'classes:'+'subset:' or 'opens:'"));

    e = err("points: a b\nclasses: [a] [b]\nsubset: a c\n");
    CHECK(e.what() == std::string("line 3: unknown point 'c'"));

    e = err("points: a b\nclasses: [a]\nsubset: a\n");
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("do not cover") != std::string::npos);

    e = err("points: a b c\nopens: [] [a] [b] [*]\n");
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("union of {a} and {b}") !=
          std::string::npos);

    e = err("points: a b\nopens: [] [a\n");
    CHECK(e.what() == std::string("line 2: unterminated '['"));

    e = err("points: a b\nopens: [] [a *]\n");
    CHECK(e.what() ==
          std::string("line 2: '*' must be the only entry in a block"));

    e = err("points: a b\nclasses: a b\nsubset: a\n");
    CHECK(e.what() == std::string("line 2: expected '[' before 'a'"));
}

TEST_CASE("printed spaces parse back to an equal space") {
    std::mt19937_64 rng(53);
    auto round_trip = [](const NanoSpace& s) {
        const std::string text = print_space_text(s);
        const NanoSpace back = parse_space_text(text);
        REQUIRE(back == s);
        REQUIRE(back.is_rough_derived() == s.is_rough_derived());
        if (s.is_rough_derived()) {
            REQUIRE(back.provenance()->subset == s.provenance()->subset);
            REQUIRE(back.provenance()->partition.blocks ==
                    s.provenance()->partition.blocks);
        }
        // Printing is idempotent.
        REQUIRE(print_space_text(back) == text);
    };
    for (int n = 1; n <= 3; ++n) {
        for (const NanoSpace& s : enumerate_spaces(n, SpaceMode::both)) {
            round_trip(s);
        }
    }
    for (int i = 0; i < 40; ++i) {
        round_trip(test::random_space(rng, 1 + static_cast<int>(rng() % 6)));
    }
}

TEST_CASE("block rendering") {
    const UniversePtr u = make_universe({"r1", "r2", "r3"});
    CHECK(block_to_string(u, 0) == "[]");
    CHECK(block_to_string(u, 0b111) == "[*]");
    CHECK(block_to_string(u, 0b101) == "[r1 r3]");
    CHECK(family_to_blocks_string(make_family(u, {0, 0b001, 0b111})) ==
          "[] [r1] [*]");
}

TEST_CASE("parsing map files") {
    const std::string text =
        "# compact and spaced arrows mix freely\n"
        "source: ex2_2.space\n"
        "target: ex3_6v.space\n"
        "map: r1->s2 r2 -> s1\n"
        "map: r3->s2\n"
        "map: r4 -> s3\n";
    const MapFileData data = parse_map_text(text);
    CHECK(data.source_ref == "ex2_2.space");
    CHECK(data.target_ref == "ex3_6v.space");
    REQUIRE(data.arrows.size() == 4);
    CHECK(data.arrows[0] == std::pair<std::string, std::string>("r1", "s2"));
    CHECK(data.arrows[3] == std::pair<std::string, std::string>("r4", "s3"));

    const UniversePtr u = make_universe({"r1", "r2", "r3", "r4"});
    const UniversePtr v = make_universe({"s1", "s2", "s3", "s4"});
    const NanoSpace src = make_explicit_space(
        u, make_family(u, {0, u->full_mask()}));
    const NanoSpace dst = make_explicit_space(
        v, make_family(v, {0, v->full_mask()}));
    const FiniteMap h = make_map_from_file_data(data, src, dst);
    CHECK(h.assignment() == std::vector<Point>{1, 0, 1, 2});
}

TEST_CASE("map parse errors") {
    auto err = [](const std::string& text) {
        return capture_parse_error([&] { parse_map_text(text); });
    };

    ParseError e = err("source: a.space\nmap: r1 -> s1\n");
    CHECK(e.what() == std::string("line 2: missing 'target:' line"));

    e = err("target: b.space\nmap: r1 -> s1\n");
    CHECK(e.what() == std::string("line 2: missing 'source:' line"));

    e = err("source: a.space\nsource: c.space\ntarget: b.space\nmap: r1 -> s1\n");
    CHECK(e.what() == std::string("line 2: duplicate key 'source'"));

    e = err("source:   \ntarget: b.space\nmap: r1 -> s1\n");
    CHECK(e.what() == std::string("line 1: empty 'source' reference"));

    e = err("source: a.space\ntarget: b.space\nmap: r1 -> s1 r2\n");
    CHECK(e.what() ==
          std::string("line 3: arrows must come in 'from -> to' triples"));

    e = err("source: a.space\ntarget: b.space\nmap: r1 s1 r2\n");
    CHECK(e.what() == std::string("line 3: expected '->' after 'r1'"));

    e = err("source: a.space\ntarget: b.space\nmood: fine\n");
    CHECK(e.what() == std::string("line 3: unknown key 'mood'"));
}
