#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nanotop/continuity.hpp"

namespace nanotop {

// Source data for the bundled worked-example corpus. Everything is stored by
// label exactly as published; the verifier rebuilds the objects and checks
// each stated family and classification against a fresh computation.

struct WorkedSpace {
    std::string name;  // "U", "V" or "W"
    std::vector<std::string> points;
    // Rough data (empty when the example gives only an explicit topology).
    std::vector<std::vector<std::string>> classes;
    std::vector<std::string> subset;
    bool has_rough_data = false;
    // Published families, as label lists. printed_opens is always present;
    // the alpha/semi-alpha lists only when the example states them.
    std::vector<std::vector<std::string>> printed_opens;
    std::vector<std::vector<std::string>> printed_alpha;
    bool has_printed_alpha = false;
    std::vector<std::vector<std::string>> printed_salpha;
    bool has_printed_salpha = false;
    // Whether deriving the topology from the rough data reproduces
    // printed_opens. When false the example is replayed with the printed
    // topology and the mismatch is reported as a known discrepancy.
    bool derivation_matches_printed = true;
};

struct ExpectedClassification {
    ContinuityClass cls;
    bool value;
    std::string source;  // corpus id stating this fact, e.g. "ex3_8"
};

struct WorkedMap {
    std::string name;  // "h", "h1", "h2"
    int domain_index = 0;
    int codomain_index = 1;
    std::vector<std::pair<std::string, std::string>> arrows;
    std::vector<ExpectedClassification> expected;
};

struct WorkedExample {
    std::string id;  // "ex2_2", "ex3_5", ...
    std::vector<WorkedSpace> spaces;
    std::vector<WorkedMap> maps;
    // ex3_22 composes its two maps and expects the composition to drop out
    // of both the alpha and semi-alpha continuity classes.
    bool check_composition_failure = false;
};

const std::vector<WorkedExample>& worked_examples();

}  // namespace nanotop
