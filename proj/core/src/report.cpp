#include "nanotop/report.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "nanotop/open_sets.hpp"
#include "nanotop/text_format.hpp"

namespace nanotop {

namespace {

using nlohmann::json;

std::string yes_no(bool v) { return v ? "yes" : "no"; }

// --- JSON building blocks ----------------------------------------------------

json labels_json(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    return json(labels);
}

json set_json(const UniversePtr& u, Mask bits) {
    return labels_json(PointSet{u, bits}.labels());
}

json family_json(const UniversePtr& u, const std::vector<Mask>& members) {
    json arr = json::array();
    for (Mask m : members) arr.push_back(set_json(u, m));
    return arr;
}

json space_json(const NanoSpace& s) {
    const UniversePtr& u = s.universe();
    json j;
    j["points"] = labels_json(u->labels());
    j["opens"] = family_json(u, s.opens().members);
    if (s.is_rough_derived()) {
        const RoughProvenance& rp = *s.provenance();
        j["derivation"] = "rough";
        json classes = json::array();
        for (Mask block : rp.partition.blocks) {
            classes.push_back(set_json(u, block));
        }
        j["classes"] = classes;
        j["subset"] = set_json(u, rp.subset);
        j["lower"] = set_json(u, rp.lower);
        j["upper"] = set_json(u, rp.upper);
        j["boundary"] = set_json(u, rp.boundary);
    } else {
        j["derivation"] = "explicit";
    }
    return j;
}

json arrows_json(const FiniteMap& h) {
    json j = json::object();
    const auto& dom = h.domain()->labels();
    for (std::size_t i = 0; i < dom.size(); ++i) {
        j[dom[i]] = h.codomain()->labels()[h.assignment()[i]];
    }
    return j;
}

json bounds_json(const InstanceBounds& b) {
    json j;
    j["max_size"] = b.max_size;
    j["mode"] = std::string(space_mode_name(b.mode));
    j["seed"] = b.seed;
    j["pair_samples_per_combo"] = b.pair_samples_per_combo;
    j["triple_samples_per_combo"] = b.triple_samples_per_combo;
    return j;
}

json pair_witness_json(const PairWitness& w) {
    json j;
    j["domain"] = space_json(w.domain_space);
    j["codomain"] = space_json(w.codomain_space);
    j["map"] = arrows_json(w.map);
    j["holds"] = std::string(class_token(w.holds));
    j["fails"] = std::string(class_token(w.fails));
    return j;
}

json composition_witness_json(const CompositionWitness& w) {
    json j;
    j["u_space"] = space_json(w.u_space);
    j["v_space"] = space_json(w.v_space);
    j["w_space"] = space_json(w.w_space);
    j["h1"] = arrows_json(w.h1);
    j["h2"] = arrows_json(w.h2);
    j["premise"] = std::string(class_token(w.premise));
    j["conclusion"] = std::string(class_token(w.conclusion));
    return j;
}

json discrepancies_json(const std::vector<Discrepancy>& v) {
    json arr = json::array();
    for (const Discrepancy& d : v) {
        json j;
        j["check"] = d.check;
        j["detail"] = d.detail;
        if (d.instance) j["witness"] = pair_witness_json(*d.instance);
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string_view cell_state_name(CellState s) {
    return s == CellState::refuted ? "refuted" : "proved";
}

std::string_view cell_claim_name(CellClaim c) {
    switch (c) {
        case CellClaim::stated: return "stated";
        case CellClaim::derived: return "derived";
        case CellClaim::trivial: return "trivial";
    }
    return "?";
}

json matrix_json(const ImplicationMatrix& m) {
    json j;
    j["scanned_max_size"] = m.scanned_max_size;
    j["mode"] = std::string(space_mode_name(m.mode));
    j["refuted_count"] = m.refuted_count();
    json cells = json::array();
    for (ContinuityClass a : all_continuity_classes) {
        for (ContinuityClass b : all_continuity_classes) {
            const MatrixCell& cell = m.cell(a, b);
            json cj;
            cj["from"] = std::string(class_token(a));
            cj["to"] = std::string(class_token(b));
            cj["state"] = std::string(cell_state_name(cell.state));
            cj["claim"] = std::string(cell_claim_name(cell.claim));
            if (cell.witness) cj["witness"] = pair_witness_json(*cell.witness);
            cells.push_back(std::move(cj));
        }
    }
    j["cells"] = std::move(cells);
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- text building blocks ----------------------------------------------------

std::string bounds_text(const InstanceBounds& b) {
    return "bounds: max-size " + std::to_string(b.max_size) + ", mode " +
           std::string(space_mode_name(b.mode)) + ", seed " +
           std::to_string(b.seed) + ", pair-samples " +
           std::to_string(b.pair_samples_per_combo) + ", triple-samples " +
           std::to_string(b.triple_samples_per_combo) + "\n";
}

void append_discrepancies(std::string& out, std::string_view label,
                          std::uint64_t count,
                          const std::vector<Discrepancy>& records) {
    out += std::string(label) + ": " + std::to_string(count) + "\n";
    for (const Discrepancy& d : records) {
        out += "  " + d.check + " — " + d.detail + "\n";
    }
    if (count > records.size()) {
        out += "  (showing first " + std::to_string(records.size()) + ")\n";
    }
}

std::string result_line(bool ok) {
    return std::string("result: ") + (ok ? "PASS" : "FAIL") + "\n";
}

std::string matrix_text(const ImplicationMatrix& m) {
    std::string out = "implication matrix (row class implies column class; "
                      "scanned to size " +
                      std::to_string(m.scanned_max_size) + ", mode " +
                      std::string(space_mode_name(m.mode)) + "):\n";
    auto pad = [](std::string s, std::size_t w) {
        while (s.size() < w) s += ' ';
        return s;
    };
    out += pad("", 8);
    for (ContinuityClass b : all_continuity_classes) {
        out += pad(std::string(class_token(b)), 7);
    }
    out += '\n';
    for (ContinuityClass a : all_continuity_classes) {
        out += "  " + pad(std::string(class_token(a)), 6);
        for (ContinuityClass b : all_continuity_classes) {
            const MatrixCell& cell = m.cell(a, b);
            std::string sym;
            if (cell.state == CellState::refuted) {
                sym = "x";
            } else if (cell.claim == CellClaim::trivial) {
                sym = "=";
            } else if (cell.claim == CellClaim::stated) {
                sym = "s";
            } else {
                sym = "d";
            }
            out += pad(sym, 7);
        }
        out += '\n';
    }
    out += "  (s = stated, d = consequence of stated, x = refuted by "
           "witness, = = trivial)\n";
    out += "refuted cells: " + std::to_string(m.refuted_count()) +
           ", unrefuted: " + std::to_string(49 - m.refuted_count()) + "\n";
    return out;
}

std::string space_block_text(const std::string& title, const NanoSpace& s) {
    std::string out = title + ":\n";
    std::string body = print_space_text(s);
    std::size_t pos = 0;
    while (pos < body.size()) {
        const std::size_t nl = body.find('\n', pos);
        out += "  " + body.substr(pos, nl - pos) + "\n";
        pos = nl + 1;
    }
    if (s.is_rough_derived()) {
        out += "  opens: " + family_to_blocks_string(s.opens()) + "\n";
    }
    return out;
}

std::string pair_witness_text(const PairWitness& w) {
    std::string out = space_block_text("domain", w.domain_space);
    out += space_block_text("codomain", w.codomain_space);
    out += "map: " + w.map.arrows_string() + "\n";
    out += "holds: " + std::string(class_token(w.holds)) +
           ", fails: " + std::string(class_token(w.fails)) + "\n";
    return out;
}

std::string composition_witness_text(const CompositionWitness& w) {
    std::string out = space_block_text("U", w.u_space);
    out += space_block_text("V", w.v_space);
    out += space_block_text("W", w.w_space);
    out += "h1: " + w.h1.arrows_string() + "\n";
    out += "h2: " + w.h2.arrows_string() + "\n";
    out += "premise: both maps " + std::string(class_token(w.premise)) +
           "-continuous; composition not " +
           std::string(class_token(w.conclusion)) + "-continuous\n";
    return out;
}

}  // namespace

// --- space families -----------------------------------------------------------

std::string space_families_text(const NanoSpace& s) {
    std::string out = print_space_text(s);
    if (s.is_rough_derived()) {
        const RoughProvenance& rp = *s.provenance();
        const UniversePtr& u = s.universe();
        out += "lower: " + block_to_string(u, rp.lower) + "\n";
        out += "upper: " + block_to_string(u, rp.upper) + "\n";
        out += "boundary: " + block_to_string(u, rp.boundary) + "\n";
        out += "opens: " + family_to_blocks_string(s.opens()) + "\n";
    }
    const struct {
        const char* label;
        FamilyKind kind;
    } rows[] = {
        {"alpha-opens", FamilyKind::nalpha_open},
        {"semi-alpha-opens", FamilyKind::nsalpha_open},
        {"closeds", FamilyKind::n_closed},
        {"alpha-closeds", FamilyKind::nalpha_closed},
        {"semi-alpha-closeds", FamilyKind::nsalpha_closed},
    };
    for (const auto& row : rows) {
        out += std::string(row.label) + ": " +
               family_to_blocks_string(enumerate_family(s, row.kind)) + "\n";
    }
    return out;
}

std::string space_families_json(const NanoSpace& s) {
    json j;
    j["space"] = space_json(s);
    json fams;
    for (FamilyKind k :
         {FamilyKind::n_open, FamilyKind::nalpha_open, FamilyKind::nsalpha_open,
          FamilyKind::n_closed, FamilyKind::nalpha_closed,
          FamilyKind::nsalpha_closed}) {
        fams[std::string(family_kind_name(k))] =
            family_json(s.universe(), enumerate_family(s, k).members);
    }
    j["families"] = std::move(fams);
    return dump(j);
}

// --- map classify ---------------------------------------------------------------

std::string map_classify_text(const NanoSpace& domain_space,
                              const NanoSpace& codomain_space,
                              const FiniteMap& map,
                              const ContinuityProfile& profile) {
    std::string out = space_block_text("domain", domain_space);
    out += space_block_text("codomain", codomain_space);
    out += "map: " + map.arrows_string() + "\n";
    out += "injective: " + yes_no(map.injective()) +
           ", surjective: " + yes_no(map.surjective()) +
           ", bijective: " + yes_no(map.bijective()) + "\n";
    out += "open map: " + yes_no(profile.n_open_map) + "\n";
    for (ContinuityClass c : all_continuity_classes) {
        out += std::string(class_token(c)) + ": " + yes_no(profile[c]) + "\n";
    }
    return out;
}

std::string map_classify_json(const NanoSpace& domain_space,
                              const NanoSpace& codomain_space,
                              const FiniteMap& map,
                              const ContinuityProfile& profile) {
    json j;
    j["domain"] = space_json(domain_space);
    j["codomain"] = space_json(codomain_space);
    j["map"] = arrows_json(map);
    j["injective"] = map.injective();
    j["surjective"] = map.surjective();
    j["bijective"] = map.bijective();
    j["n_open_map"] = profile.n_open_map;
    json classes;
    for (ContinuityClass c : all_continuity_classes) {
        classes[std::string(class_token(c))] = profile[c];
    }
    j["classes"] = std::move(classes);
    return dump(j);
}

// --- verify implications --------------------------------------------------------

std::string report_text(const ImplicationsReport& r) {
    std::string out = "check: implication hierarchy and separation matrix\n";
    out += bounds_text(r.bounds);
    out += "exhaustive pair instances (all sides <= " +
           std::to_string(std::min(r.bounds.max_size, exhaustive_pair_cap)) +
           "): " + std::to_string(r.exhaustive_instances) + "\n";
    out += "matrix instances (sides <= " +
           std::to_string(r.matrix.scanned_max_size) +
           "): " + std::to_string(r.matrix_instances) + "\n";
    out += "sampled instances: " + std::to_string(r.sampled_instances) + "\n";
    append_discrepancies(out, "hierarchy violations", r.violation_count,
                         r.violations);
    out += matrix_text(r.matrix);
    out += result_line(r.ok());
    return out;
}

std::string report_json(const ImplicationsReport& r) {
    json j;
    j["check"] = "implications";
    j["bounds"] = bounds_json(r.bounds);
    j["exhaustive_instances"] = r.exhaustive_instances;
    j["matrix_instances"] = r.matrix_instances;
    j["sampled_instances"] = r.sampled_instances;
    j["violation_count"] = r.violation_count;
    j["violations"] = discrepancies_json(r.violations);
    j["matrix"] = matrix_json(r.matrix);
    j["ok"] = r.ok();
    return dump(j);
}

// --- verify equivalences ----------------------------------------------------------

std::string report_text(const EquivalencesReport& r) {
    std::string out = "check: characterization equivalences\n";
    out += bounds_text(r.bounds);
    out += "spaces scanned (set level): " + std::to_string(r.spaces_scanned) +
           "\n";
    out += "subsets checked: " + std::to_string(r.subsets_checked) + "\n";
    out += "alpha-open families failing the topology axioms: " +
           std::to_string(r.alpha_family_topology_failures) + "\n";
    out += "semi-alpha-open families failing the topology axioms: " +
           std::to_string(r.nsalpha_family_topology_failures) + "\n";
    out += "exhaustive map instances: " +
           std::to_string(r.exhaustive_instances) + "\n";
    out += "sampled map instances: " + std::to_string(r.sampled_instances) +
           "\n";
    append_discrepancies(out, "discrepancies", r.discrepancy_count,
                         r.discrepancies);
    out += result_line(r.ok());
    return out;
}

std::string report_json(const EquivalencesReport& r) {
    json j;
    j["check"] = "equivalences";
    j["bounds"] = bounds_json(r.bounds);
    j["spaces_scanned"] = r.spaces_scanned;
    j["subsets_checked"] = r.subsets_checked;
    j["alpha_family_topology_failures"] = r.alpha_family_topology_failures;
    j["nsalpha_family_topology_failures"] = r.nsalpha_family_topology_failures;
    j["exhaustive_instances"] = r.exhaustive_instances;
    j["sampled_instances"] = r.sampled_instances;
    j["discrepancy_count"] = r.discrepancy_count;
    j["discrepancies"] = discrepancies_json(r.discrepancies);
    j["ok"] = r.ok();
    return dump(j);
}

// --- verify theorems ---------------------------------------------------------------

std::string report_text(const TheoremsReport& r) {
    std::string out = "check: conditional statements on bijective open maps\n";
    out += bounds_text(r.bounds);
    out += "bijective instances: " + std::to_string(r.bijective_instances) +
           "\n";
    out += "bijective open-map instances: " +
           std::to_string(r.n_open_bijective_instances) + "\n";
    out += "premise hits (continuous => starred-alpha): " +
           std::to_string(r.premise_hits_a) + "\n";
    out += "premise hits (starred-alpha => starred-semi-alpha): " +
           std::to_string(r.premise_hits_b) + "\n";
    append_discrepancies(out, "violations", r.violation_count, r.violations);
    for (const std::string& note : r.notes) out += "note: " + note + "\n";
    out += result_line(r.ok());
    return out;
}

std::string report_json(const TheoremsReport& r) {
    json j;
    j["check"] = "theorems";
    j["bounds"] = bounds_json(r.bounds);
    j["bijective_instances"] = r.bijective_instances;
    j["n_open_bijective_instances"] = r.n_open_bijective_instances;
    j["premise_hits_continuous_implies_alpha_star"] = r.premise_hits_a;
    j["premise_hits_alpha_star_implies_semi_alpha_star"] = r.premise_hits_b;
    j["violation_count"] = r.violation_count;
    j["violations"] = discrepancies_json(r.violations);
    j["notes"] = r.notes;
    j["ok"] = r.ok();
    return dump(j);
}

// --- verify compositions --------------------------------------------------------------

std::string report_text(const CompositionsReport& r) {
    std::string out = "check: composition behaviour\n";
    out += bounds_text(r.bounds);
    out += "exhaustive triple instances: " +
           std::to_string(r.exhaustive_triples) + "\n";
    out += "sampled triple instances: " + std::to_string(r.sampled_triples) +
           "\n";
    for (const ClauseStats& c : r.clauses) {
        out += "clause " + c.name +
               ": premise hits " + std::to_string(c.premise_hits) +
               ", violations " + std::to_string(c.violations) + "\n";
    }
    append_discrepancies(out, "violations", r.violation_count, r.violations);
    if (r.nalpha_witness) {
        out += "witness that alpha continuity is not closed under "
               "composition:\n" +
               composition_witness_text(*r.nalpha_witness);
    } else {
        out += "no composition-failure witness found for alpha continuity "
               "within bounds\n";
    }
    if (r.nsalpha_witness) {
        out += "witness that semi-alpha continuity is not closed under "
               "composition:\n" +
               composition_witness_text(*r.nsalpha_witness);
    } else {
        out += "no composition-failure witness found for semi-alpha "
               "continuity within bounds\n";
    }
    out += result_line(r.ok());
    return out;
}

std::string report_json(const CompositionsReport& r) {
    json j;
    j["check"] = "compositions";
    j["bounds"] = bounds_json(r.bounds);
    j["exhaustive_triples"] = r.exhaustive_triples;
    j["sampled_triples"] = r.sampled_triples;
    json clauses = json::array();
    for (const ClauseStats& c : r.clauses) {
        json cj;
        cj["name"] = c.name;
        cj["premise_hits"] = c.premise_hits;
        cj["violations"] = c.violations;
        clauses.push_back(std::move(cj));
    }
    j["clauses"] = std::move(clauses);
    j["alpha_composition_witness"] =
        r.nalpha_witness ? composition_witness_json(*r.nalpha_witness)
                         : json(nullptr);
    j["semi_alpha_composition_witness"] =
        r.nsalpha_witness ? composition_witness_json(*r.nsalpha_witness)
                          : json(nullptr);
    j["violation_count"] = r.violation_count;
    j["violations"] = discrepancies_json(r.violations);
    j["ok"] = r.ok();
    return dump(j);
}

// --- repro ------------------------------------------------------------------------------

std::string report_text(const ReproReport& r) {
    std::string out = "check: bundled worked-example corpus\n";
    for (const ExampleResult& ex : r.examples) {
        out += ex.id + ": " + std::to_string(ex.checks.size()) + " checks, " +
               (ex.all_passed() ? "all pass" : "FAILURES") + "\n";
        for (const ExampleCheck& c : ex.checks) {
            out += std::string("  ") + (c.pass ? "ok   " : "FAIL ") + c.name;
            if (!c.pass && !c.detail.empty()) out += " — " + c.detail;
            out += "\n";
        }
    }
    for (const KnownDiscrepancy& d : r.known_discrepancies) {
        out += "known discrepancy: " + d.example + " " + d.space_name + " — " +
               d.what + "\n";
        out += "  printed: " +
               family_to_blocks_string(
                   SetFamily{d.universe, d.printed_opens}) +
               "\n";
        out += "  derived: " +
               family_to_blocks_string(
                   SetFamily{d.universe, d.derived_opens}) +
               "\n";
    }
    out += "checks: " + std::to_string(r.check_count()) +
           ", failures: " + std::to_string(r.failure_count()) + "\n";
    out += result_line(r.ok());
    return out;
}

std::string report_json(const ReproReport& r) {
    json j;
    j["check"] = "repro";
    json examples = json::array();
    for (const ExampleResult& ex : r.examples) {
        json ej;
        ej["id"] = ex.id;
        ej["all_passed"] = ex.all_passed();
        json checks = json::array();
        for (const ExampleCheck& c : ex.checks) {
            json cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            if (!c.detail.empty()) cj["detail"] = c.detail;
            checks.push_back(std::move(cj));
        }
        ej["checks"] = std::move(checks);
        examples.push_back(std::move(ej));
    }
    j["examples"] = std::move(examples);
    json kds = json::array();
    for (const KnownDiscrepancy& d : r.known_discrepancies) {
        json dj;
        dj["example"] = d.example;
        dj["space"] = d.space_name;
        dj["what"] = d.what;
        dj["printed_opens"] = family_json(d.universe, d.printed_opens);
        dj["derived_opens"] = family_json(d.universe, d.derived_opens);
        kds.push_back(std::move(dj));
    }
    j["known_discrepancies"] = std::move(kds);
    j["check_count"] = r.check_count();
    j["failure_count"] = r.failure_count();
    j["ok"] = r.ok();
    return dump(j);
}

// --- search -------------------------------------------------------------------------------

std::string report_text(const SearchReport& r) {
    std::string out = "search: maps that are " +
                      std::string(class_token(r.holds)) +
                      "-continuous but not " +
                      std::string(class_token(r.fails)) + "-continuous\n";
    out += bounds_text(r.bounds);
    if (r.vacuous) {
        out += "no witness (vacuous): the two classes are the same\n";
        return out;
    }
    if (r.witness) {
        out += "witness found:\n" + pair_witness_text(*r.witness);
    } else {
        out += "no witness within bounds\n";
    }
    return out;
}

std::string report_json(const SearchReport& r) {
    json j;
    j["check"] = "search";
    j["holds"] = std::string(class_token(r.holds));
    j["fails"] = std::string(class_token(r.fails));
    j["bounds"] = bounds_json(r.bounds);
    j["vacuous"] = r.vacuous;
    j["found"] = r.witness.has_value();
    j["witness"] = r.witness ? pair_witness_json(*r.witness) : json(nullptr);
    return dump(j);
}

}  // namespace nanotop
