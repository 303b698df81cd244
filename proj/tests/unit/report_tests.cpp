#include <doctest.h>

#include <json.hpp>
#include <string>

#include "nanotop/report.hpp"
#include "nanotop/text_format.hpp"

using namespace nanotop;
using nlohmann::json;

namespace {

NanoSpace sample_space() {
    const UniversePtr u = make_universe({"r1", "r2", "r3", "r4"});
    return build_nano_topology(
        partition_from_labels(u, {{"r1"}, {"r3"}, {"r2", "r4"}}),
        set_from_labels(u, {"r1", "r2"}));
}

InstanceBounds small_bounds() {
    InstanceBounds b;
    b.max_size = 2;
    b.mode = SpaceMode::nano;
    b.seed = 1;
    return b;
}

}  // namespace

TEST_CASE("space families report: text rows and JSON document") {
    const NanoSpace s = sample_space();
    const std::string text = space_families_text(s);
    CHECK(text.find("points: r1 r2 r3 r4") != std::string::npos);
    CHECK(text.find("classes: [r1] [r3] [r2 r4]") != std::string::npos);
    CHECK(text.find("subset: r1 r2") != std::string::npos);
    CHECK(text.find("lower: [r1]") != std::string::npos);
    CHECK(text.find("upper: [r1 r2 r4]") != std::string::npos);
    CHECK(text.find("boundary: [r2 r4]") != std::string::npos);
    CHECK(text.find("opens:") != std::string::npos);
    CHECK(text.find("alpha-opens:") != std::string::npos);
    CHECK(text.find("semi-alpha-opens:") != std::string::npos);
    CHECK(text.find("closeds:") != std::string::npos);

    const json j = json::parse(space_families_json(s));
    CHECK(j.at("space").at("derivation") == "rough");
    CHECK(j.at("space").at("points") ==
          json::array({"r1", "r2", "r3", "r4"}));
    CHECK(j.at("space").at("lower") == json::array({"r1"}));
    CHECK(j.at("space").at("boundary") == json::array({"r2", "r4"}));
    const json& fams = j.at("families");
    for (const char* key : {"n_open", "nalpha_open", "nsalpha_open",
                            "n_closed", "nalpha_closed", "nsalpha_closed"}) {
        REQUIRE(fams.contains(key));
    }
    CHECK(fams.at("n_open").size() == 5);
    CHECK(fams.at("nalpha_open") == fams.at("n_open"));
    CHECK(fams.at("nsalpha_open").size() == 7);
    // Families are arrays of label arrays; first member is the empty set.
    CHECK(fams.at("n_open").at(0) == json::array());
    // Explicit spaces say so.
    const UniversePtr u2 = make_universe({"a"});
    const json j2 = json::parse(space_families_json(
        make_explicit_space(u2, make_family(u2, {0, 1}))));
    CHECK(j2.at("space").at("derivation") == "explicit");
    CHECK_FALSE(j2.at("space").contains("classes"));
}

TEST_CASE("map classification report") {
    const NanoSpace s = sample_space();
    const FiniteMap h = identity_map(s.universe());
    const ContinuityProfile p = classify(h, s, s);
    const std::string text = map_classify_text(s, s, h, p);
    CHECK(text.find("map: r1->r1 r2->r2 r3->r3 r4->r4") != std::string::npos);
    CHECK(text.find("bijective: yes") != std::string::npos);
    CHECK(text.find("open map: yes") != std::string::npos);
    CHECK(text.find("N: yes") != std::string::npos);
    CHECK(text.find("NSa**: no") != std::string::npos);

    const json j = json::parse(map_classify_json(s, s, h, p));
    CHECK(j.at("injective") == true);
    CHECK(j.at("surjective") == true);
    CHECK(j.at("bijective") == true);
    CHECK(j.at("n_open_map") == true);
    CHECK(j.at("map").at("r1") == "r1");
    CHECK(j.at("classes").at("N") == true);
    CHECK(j.at("classes").at("Na**") == true);
    CHECK(j.at("classes").at("NSa**") == false);
    CHECK(j.at("domain").at("points").size() == 4);
}

TEST_CASE("verification reports are valid JSON with documented keys") {
    const InstanceBounds b = small_bounds();

    const ImplicationsReport imp = check_implications(b);
    const json ji = json::parse(report_json(imp));
    CHECK(ji.at("bounds").at("max_size") == 2);
    CHECK(ji.at("bounds").at("mode") == "nano");
    CHECK(ji.at("bounds").at("seed") == 1);
    CHECK(ji.at("exhaustive_instances").get<std::uint64_t>() > 0);
    CHECK(ji.at("violation_count") == 0);
    CHECK(ji.at("ok") == true);
    const json& matrix = ji.at("matrix");
    CHECK(matrix.at("cells").size() == 49);
    CHECK(matrix.at("scanned_max_size") == 2);
    const json& first = matrix.at("cells").at(0);
    CHECK(first.at("from") == "N");
    CHECK(first.at("to") == "N");
    CHECK(first.at("state") == "proved");
    CHECK(first.at("claim") == "trivial");
    int refuted = 0;
    for (const json& cell : matrix.at("cells")) {
        if (cell.at("state") == "refuted") {
            ++refuted;
            REQUIRE(cell.contains("witness"));
            const json& w = cell.at("witness");
            CHECK(w.at("holds") == cell.at("from"));
            CHECK(w.at("fails") == cell.at("to"));
            CHECK(w.at("domain").contains("opens"));
            CHECK(w.at("map").is_object());
        }
    }
    CHECK(refuted == matrix.at("refuted_count").get<int>());

    const std::string text = report_text(imp);
    CHECK(text.find("result: PASS") != std::string::npos);
    CHECK(text.find("refuted cells:") != std::string::npos);
    CHECK(text.find("s = stated") != std::string::npos);

    const EquivalencesReport eq = check_equivalences(b);
    const json je = json::parse(report_json(eq));
    CHECK(je.at("discrepancy_count") == 0);
    CHECK(je.at("spaces_scanned") == 10);
    CHECK(je.at("ok") == true);
    CHECK(report_text(eq).find("result: PASS") != std::string::npos);

    const TheoremsReport th = check_conditional_theorems(b);
    const json jt = json::parse(report_json(th));
    CHECK(jt.at("bijective_instances") == 132);  // 2^2*1! + 8^2*2!
    CHECK(jt.contains("premise_hits_continuous_implies_alpha_star"));
    CHECK(jt.contains("premise_hits_alpha_star_implies_semi_alpha_star"));
    CHECK(jt.at("ok") == true);

    const CompositionsReport co = check_compositions(b);
    const json jc = json::parse(report_json(co));
    CHECK(jc.at("exhaustive_triples") == 10152);
    CHECK(jc.at("clauses").size() == 10);
    CHECK(jc.at("clauses").at(0).at("premise_hits").get<std::uint64_t>() > 0);
    CHECK(jc.at("clauses").at(0).at("violations") == 0);
    // Witness keys are present even when the searches found nothing yet.
    CHECK(jc.contains("alpha_composition_witness"));
    CHECK(jc.contains("semi_alpha_composition_witness"));
}

TEST_CASE("repro and search reports") {
    const ReproReport rep = repro_worked_examples();
    const json jr = json::parse(report_json(rep));
    CHECK(jr.at("check_count") == 46);
    CHECK(jr.at("failure_count") == 0);
    CHECK(jr.at("ok") == true);
    CHECK(jr.at("examples").size() == 8);
    CHECK(jr.at("examples").at(0).at("id") == "ex2_2");
    CHECK(jr.at("known_discrepancies").size() == 3);
    const json& d = jr.at("known_discrepancies").at(0);
    CHECK(d.at("example") == "ex3_14");
    CHECK(d.at("space") == "V");
    CHECK(d.contains("printed_opens"));
    CHECK(d.contains("derived_opens"));
    const std::string rtext = report_text(rep);
    CHECK(rtext.find("known discrepancy: ex3_22") != std::string::npos);
    CHECK(rtext.find("result: PASS") != std::string::npos);

    const SearchReport vac =
        run_search(ContinuityClass::n, ContinuityClass::n, small_bounds());
    const json jv = json::parse(report_json(vac));
    CHECK(jv.at("vacuous") == true);
    CHECK(jv.at("found") == false);
    CHECK(jv.at("witness").is_null());
    CHECK(report_text(vac).find("no witness (vacuous)") != std::string::npos);

    // Two-point spaces cannot separate NSa from Na* (all three open-set
    // notions coincide there), so this search needs the 3-point pools.
    InstanceBounds b3 = small_bounds();
    b3.max_size = 3;
    const SearchReport found = run_search(
        ContinuityClass::nsalpha, ContinuityClass::nalpha_star, b3);
    const json jf = json::parse(report_json(found));
    CHECK(jf.at("found") == true);
    CHECK(jf.at("holds") == "NSa");
    CHECK(jf.at("fails") == "Na*");
    CHECK(jf.at("witness").is_object());
}

TEST_CASE("reports are deterministic and end with a newline") {
    const InstanceBounds b = small_bounds();
    CHECK(report_json(check_implications(b)) ==
          report_json(check_implications(b)));
    CHECK(report_text(check_compositions(b)) ==
          report_text(check_compositions(b)));
    const std::string j = report_json(check_equivalences(b));
    REQUIRE_FALSE(j.empty());
    CHECK(j.back() == '\n');
    const std::string t = space_families_text(sample_space());
    REQUIRE_FALSE(t.empty());
    CHECK(t.back() == '\n');
}
