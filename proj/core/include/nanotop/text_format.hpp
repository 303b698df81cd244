#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nanotop/errors.hpp"
#include "nanotop/finite_map.hpp"
#include "nanotop/space.hpp"

namespace nanotop {

// Line-oriented description formats (UTF-8, `#` comments, one `key: value`
// item per line).
//
// Space files:
//     points: r1 r2 r3 r4
//     classes: [r1] [r3] [r2 r4]
//     subset: r1 r2
// or, for an explicit topology ( `[]` = empty set, `[*]` = full universe ):
//     points: a b
//     opens: [] [a] [*]
// Exactly one of {classes+subset, opens} must be present.
//
// Map files:
//     source: ex2_2.space
//     target: ex3_6v.space
//     map: r1 -> s2 r2 -> s1 r3 -> s2 r4 -> s3
// (arrows may be written r1->s2; several `map:` lines concatenate).

// Throws ParseError (with 1-based line number) on malformed input; explicit
// open families are validated against the topology axioms.
NanoSpace parse_space_text(const std::string& text);

// Canonical form: points line, then either classes+subset (rough-derived) or
// opens (explicit). Parsing the output reproduces an equal space.
std::string print_space_text(const NanoSpace& s);

struct MapFileData {
    std::string source_ref;  // space file the domain comes from
    std::string target_ref;  // space file the codomain comes from
    std::vector<std::pair<std::string, std::string>> arrows;
};

MapFileData parse_map_text(const std::string& text);

// Resolves the arrows against parsed spaces; totality and label errors throw
// std::invalid_argument.
FiniteMap make_map_from_file_data(const MapFileData& data,
                                  const NanoSpace& source,
                                  const NanoSpace& target);

// Block syntax helpers shared with reporting: "[r1 r2]", "[]", "[*]".
std::string block_to_string(const UniversePtr& u, Mask bits);
std::string family_to_blocks_string(const SetFamily& f);

}  // namespace nanotop
