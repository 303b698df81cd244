#include "nanotop/worked_examples.hpp"

namespace nanotop {

namespace {

using Labels = std::vector<std::string>;
using LabelFamily = std::vector<std::vector<std::string>>;

WorkedSpace rough_space(std::string name, Labels points, LabelFamily classes,
                        Labels subset, LabelFamily printed_opens,
                        bool derivation_matches = true) {
    WorkedSpace s;
    s.name = std::move(name);
    s.points = std::move(points);
    s.classes = std::move(classes);
    s.subset = std::move(subset);
    s.has_rough_data = true;
    s.printed_opens = std::move(printed_opens);
    s.derivation_matches_printed = derivation_matches;
    return s;
}

void with_alpha(WorkedSpace& s, LabelFamily alpha) {
    s.printed_alpha = std::move(alpha);
    s.has_printed_alpha = true;
}

void with_salpha(WorkedSpace& s, LabelFamily salpha) {
    s.printed_salpha = std::move(salpha);
    s.has_printed_salpha = true;
}

WorkedMap map_of(std::string name, int dom, int cod,
                 std::vector<std::pair<std::string, std::string>> arrows,
                 std::vector<ExpectedClassification> expected) {
    WorkedMap m;
    m.name = std::move(name);
    m.domain_index = dom;
    m.codomain_index = cod;
    m.arrows = std::move(arrows);
    m.expected = std::move(expected);
    return m;
}

std::vector<WorkedExample> build() {
    using C = ContinuityClass;
    std::vector<WorkedExample> v;

    // ex2_2: one rough-derived space with its full alpha / semi-alpha
    // families stated.
    {
        WorkedExample ex;
        ex.id = "ex2_2";
        WorkedSpace u = rough_space(
            "U", {"r1", "r2", "r3", "r4"}, {{"r1"}, {"r3"}, {"r2", "r4"}},
            {"r1", "r2"},
            {{},
             {"r1"},
             {"r2", "r4"},
             {"r1", "r2", "r4"},
             {"r1", "r2", "r3", "r4"}});
        with_alpha(u, {{},
                       {"r1"},
                       {"r2", "r4"},
                       {"r1", "r2", "r4"},
                       {"r1", "r2", "r3", "r4"}});
        with_salpha(u, {{},
                        {"r1"},
                        {"r2", "r4"},
                        {"r1", "r2", "r4"},
                        {"r1", "r3"},
                        {"r2", "r3", "r4"},
                        {"r1", "r2", "r3", "r4"}});
        ex.spaces.push_back(std::move(u));
        v.push_back(std::move(ex));
    }

    // ex3_5: alpha-continuous (and semi-alpha-continuous) but not
    // continuous; also starred-alpha-continuous (the ex3_8 claim).
    {
        WorkedExample ex;
        ex.id = "ex3_5";
        ex.spaces.push_back(rough_space(
            "U", {"r1", "r2", "r3", "r4"}, {{"r1"}, {"r4"}, {"r2", "r3"}},
            {"r1", "r4"},
            {{}, {"r1", "r4"}, {"r1", "r2", "r3", "r4"}}));
        ex.spaces.push_back(rough_space(
            "V", {"s1", "s2", "s3", "s4"}, {{"s1"}, {"s3"}, {"s2", "s4"}},
            {"s1", "s2"},
            {{},
             {"s1"},
             {"s2", "s4"},
             {"s1", "s2", "s4"},
             {"s1", "s2", "s3", "s4"}}));
        ex.maps.push_back(map_of(
            "h", 0, 1,
            {{"r1", "s2"}, {"r2", "s2"}, {"r3", "s3"}, {"r4", "s4"}},
            {{C::nalpha, true, "ex3_5"},
             {C::n, false, "ex3_5"},
             {C::nsalpha, true, "ex3_5"},
             {C::nalpha_star, true, "ex3_8"}}));
        v.push_back(std::move(ex));
    }

    // ex3_6: semi-alpha-continuous but not alpha-continuous; also
    // starred-semi-alpha-continuous (the ex3_13 claim).
    {
        WorkedExample ex;
        ex.id = "ex3_6";
        ex.spaces.push_back(rough_space(
            "U", {"r1", "r2", "r3", "r4"}, {{"r1"}, {"r3"}, {"r2", "r4"}},
            {"r1", "r2"},
            {{},
             {"r1"},
             {"r2", "r4"},
             {"r1", "r2", "r4"},
             {"r1", "r2", "r3", "r4"}}));
        ex.spaces.push_back(rough_space(
            "V", {"s1", "s2", "s3", "s4"}, {{"s2"}, {"s4"}, {"s1", "s3"}},
            {"s1", "s2"},
            {{},
             {"s2"},
             {"s1", "s3"},
             {"s1", "s2", "s3"},
             {"s1", "s2", "s3", "s4"}}));
        ex.maps.push_back(map_of(
            "h", 0, 1,
            {{"r1", "s2"}, {"r2", "s1"}, {"r3", "s2"}, {"r4", "s3"}},
            {{C::nsalpha, true, "ex3_6"},
             {C::nalpha, false, "ex3_6"},
             {C::nsalpha_star, true, "ex3_13"},
             {C::n, false, "ex3_13"}}));
        v.push_back(std::move(ex));
    }

    // ex3_9: continuous but not starred-alpha-continuous.
    {
        WorkedExample ex;
        ex.id = "ex3_9";
        ex.spaces.push_back(rough_space(
            "U", {"r1", "r2", "r3", "r4"}, {{"r1"}, {"r3"}, {"r2", "r4"}},
            {"r1", "r2"},
            {{},
             {"r1"},
             {"r2", "r4"},
             {"r1", "r2", "r4"},
             {"r1", "r2", "r3", "r4"}}));
        ex.spaces.push_back(rough_space(
            "V", {"s1", "s2", "s3", "s4"}, {{"s1"}, {"s4"}, {"s2", "s3"}},
            {"s1", "s4"},
            {{}, {"s1", "s4"}, {"s1", "s2", "s3", "s4"}}));
        ex.maps.push_back(map_of(
            "h", 0, 1,
            {{"r1", "s2"}, {"r2", "s1"}, {"r3", "s3"}, {"r4", "s4"}},
            {{C::n, true, "ex3_9"}, {C::nalpha_star, false, "ex3_9"}}));
        v.push_back(std::move(ex));
    }

    // ex3_14: continuous but not starred-semi-alpha-continuous. The printed
    // codomain family is not the one its classes/subset generate; the
    // example is replayed with the printed family and the mismatch is
    // surfaced as a known discrepancy.
    {
        WorkedExample ex;
        ex.id = "ex3_14";
        ex.spaces.push_back(rough_space(
            "U", {"r1", "r2", "r3", "r4"}, {{"r1"}, {"r4"}, {"r2", "r3"}},
            {"r1", "r3"},
            {{},
             {"r1"},
             {"r2", "r3"},
             {"r1", "r2", "r3"},
             {"r1", "r2", "r3", "r4"}}));
        ex.spaces.push_back(rough_space(
            "V", {"s1", "s2", "s3"}, {{"s1"}, {"s2", "s3"}}, {"s1", "s3"},
            {{}, {"s1"}, {"s1", "s2", "s3"}},
            /*derivation_matches=*/false));
        ex.maps.push_back(map_of(
            "h", 0, 1,
            {{"r1", "s1"}, {"r2", "s2"}, {"r3", "s3"}, {"r4", "s3"}},
            {{C::n, true, "ex3_14"},
             {C::nsalpha_star, false, "ex3_14"}}));
        v.push_back(std::move(ex));
    }

    // ex3_16: alpha- and semi-alpha-continuous but not
    // starred-alpha-continuous; also starred-semi-alpha-continuous (the
    // ex3_18 claim).
    {
        WorkedExample ex;
        ex.id = "ex3_16";
        ex.spaces.push_back(rough_space(
            "U", {"r1", "r2", "r3", "r4"}, {{"r2"}, {"r3"}, {"r1", "r4"}},
            {"r1", "r3"},
            {{},
             {"r3"},
             {"r1", "r4"},
             {"r1", "r3", "r4"},
             {"r1", "r2", "r3", "r4"}}));
        ex.spaces.push_back(rough_space(
            "V", {"s1", "s2", "s3", "s4"},
            {{"s1"}, {"s2"}, {"s3"}, {"s4"}}, {"s1", "s4"},
            {{}, {"s1", "s4"}, {"s1", "s2", "s3", "s4"}}));
        ex.maps.push_back(map_of(
            "h", 0, 1,
            {{"r1", "s1"}, {"r2", "s2"}, {"r3", "s3"}, {"r4", "s4"}},
            {{C::nalpha, true, "ex3_16"},
             {C::nsalpha, true, "ex3_16"},
             {C::nalpha_star, false, "ex3_16"},
             {C::nsalpha_star, true, "ex3_18"}}));
        v.push_back(std::move(ex));
    }

    // ex3_19: starred-alpha-continuous but not starred-semi-alpha-continuous.
    {
        WorkedExample ex;
        ex.id = "ex3_19";
        ex.spaces.push_back(rough_space(
            "U", {"r1", "r2", "r3", "r4"}, {{"r1"}, {"r3"}, {"r2", "r4"}},
            {"r1", "r2"},
            {{},
             {"r1"},
             {"r2", "r4"},
             {"r1", "r2", "r4"},
             {"r1", "r2", "r3", "r4"}}));
        ex.spaces.push_back(rough_space(
            "V", {"s1", "s2", "s3", "s4"}, {{"s2"}, {"s4"}, {"s1", "s3"}},
            {"s1", "s2"},
            {{},
             {"s2"},
             {"s1", "s3"},
             {"s1", "s2", "s3"},
             {"s1", "s2", "s3", "s4"}}));
        ex.maps.push_back(map_of(
            "h", 0, 1,
            {{"r1", "s1"}, {"r2", "s1"}, {"r3", "s4"}, {"r4", "s3"}},
            {{C::nalpha_star, true, "ex3_19"},
             {C::nsalpha_star, false, "ex3_19"}}));
        v.push_back(std::move(ex));
    }

    // ex3_22: two maps, each alpha- and semi-alpha-continuous, whose
    // composition is neither. Both printed topologies differ from what
    // their classes/subset generate (known discrepancies); the printed
    // families are used throughout, including the stated alpha/semi-alpha
    // families for both sides.
    {
        WorkedExample ex;
        ex.id = "ex3_22";
        ex.check_composition_failure = true;
        WorkedSpace u = rough_space(
            "U", {"1", "2", "3", "4"}, {{"2"}, {"4"}, {"1", "3"}}, {"1", "2"},
            {{}, {"3"}, {"1", "3"}, {"1", "2", "3"}, {"1", "2", "3", "4"}},
            /*derivation_matches=*/false);
        with_alpha(u, {{},
                       {"3"},
                       {"1", "3"},
                       {"2", "3"},
                       {"3", "4"},
                       {"1", "2", "3"},
                       {"1", "3", "4"},
                       {"2", "3", "4"},
                       {"1", "2", "3", "4"}});
        with_salpha(u, {{},
                        {"3"},
                        {"1", "3"},
                        {"2", "3"},
                        {"3", "4"},
                        {"1", "2", "3"},
                        {"1", "3", "4"},
                        {"2", "3", "4"},
                        {"1", "2", "3", "4"}});
        ex.spaces.push_back(std::move(u));
        WorkedSpace w = rough_space(
            "V", {"s1", "s2", "s3"}, {{"s1"}, {"s2"}, {"s3"}}, {"s1", "s2"},
            {{}, {"s3"}, {"s1", "s2", "s3"}},
            /*derivation_matches=*/false);
        with_alpha(w, {{},
                       {"s3"},
                       {"s1", "s3"},
                       {"s2", "s3"},
                       {"s1", "s2", "s3"}});
        with_salpha(w, {{},
                        {"s3"},
                        {"s1", "s3"},
                        {"s2", "s3"},
                        {"s1", "s2", "s3"}});
        ex.spaces.push_back(std::move(w));
        ex.maps.push_back(map_of(
            "h1", 0, 1,
            {{"1", "s1"}, {"2", "s1"}, {"3", "s2"}, {"4", "s2"}},
            {{C::nalpha, true, "ex3_22"}, {C::nsalpha, true, "ex3_22"}}));
        ex.maps.push_back(map_of(
            "h2", 1, 0, {{"s1", "3"}, {"s2", "1"}, {"s3", "3"}},
            {{C::nalpha, true, "ex3_22"}, {C::nsalpha, true, "ex3_22"}}));
        v.push_back(std::move(ex));
    }

    return v;
}

}  // namespace

const std::vector<WorkedExample>& worked_examples() {
    static const std::vector<WorkedExample> examples = build();
    return examples;
}

}  // namespace nanotop
