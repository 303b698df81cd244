// Command-line front end: parse space/map description files, classify maps,
// run the verification sweeps, search for separating witnesses, and replay
// the bundled worked-example corpus.
//
// Exit codes: 0 = success / claims verified; 1 = a verification assertion
// failed or a requested witness was not found; 2 = input or usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>

#include <CLI11.hpp>

#include "nanotop/continuity.hpp"
#include "nanotop/report.hpp"
#include "nanotop/text_format.hpp"
#include "nanotop/verify.hpp"

namespace {

using namespace nanotop;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

NanoSpace load_space(const std::filesystem::path& path) {
    try {
        return parse_space_text(read_file(path));
    } catch (const ParseError& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

// Space references inside a map file resolve relative to the map file's
// own directory, so a corpus stays relocatable.
std::tuple<NanoSpace, NanoSpace, FiniteMap> load_map(
    const std::filesystem::path& path) {
    MapFileData data;
    try {
        data = parse_map_text(read_file(path));
    } catch (const ParseError& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    const std::filesystem::path dir = path.parent_path();
    NanoSpace source = load_space(dir / data.source_ref);
    NanoSpace target = load_space(dir / data.target_ref);
    FiniteMap map = make_map_from_file_data(data, source, target);
    return {std::move(source), std::move(target), std::move(map)};
}

SpaceMode parse_mode(const std::string& name) {
    if (name == "nano") return SpaceMode::nano;
    if (name == "explicit") return SpaceMode::explicit_;
    if (name == "both") return SpaceMode::both;
    throw std::runtime_error("unknown mode '" + name +
                             "' (expected nano, explicit or both)");
}

ContinuityClass parse_class_or_throw(const std::string& token) {
    if (const auto c = parse_class_token(token)) return *c;
    throw std::runtime_error(
        "unknown continuity class '" + token +
        "' (expected one of N, Na, Na*, Na**, NSa, NSa*, NSa**)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-space toolkit for rough-set nano topologies: "
                 "families, continuity classification, and claim sweeps"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    int max_size = 3;
    std::uint64_t seed = 1;
    std::string mode_name = "nano";
    int pair_samples = 15000;
    int triple_samples = 3000;
    auto add_bounds_options = [&](CLI::App* cmd, bool with_samples) {
        cmd->add_option("--max-size", max_size,
                        "largest universe size per side (default 3)")
            ->check(CLI::Range(1, 16));
        cmd->add_option("--seed", seed, "seed for the sampled phase");
        cmd->add_option("--mode", mode_name,
                        "space pool: nano, explicit or both");
        if (with_samples) {
            cmd->add_option("--pair-samples", pair_samples,
                            "samples per (|U|,|V|) combo past the exhaustive "
                            "cap")
                ->check(CLI::NonNegativeNumber);
            cmd->add_option("--triple-samples", triple_samples,
                            "samples per (|U|,|V|,|W|) combo past the "
                            "exhaustive cap")
                ->check(CLI::NonNegativeNumber);
        }
    };

    // space families <file>
    auto* space_cmd = app.add_subcommand("space", "space-file operations");
    space_cmd->require_subcommand(1);
    auto* families_cmd = space_cmd->add_subcommand(
        "families",
        "print the open, alpha-open and semi-alpha-open families (and their "
        "closed duals)");
    std::string space_file;
    families_cmd->add_option("file", space_file, "space description file")
        ->required();

    // map classify <file>
    auto* map_cmd = app.add_subcommand("map", "map-file operations");
    map_cmd->require_subcommand(1);
    auto* classify_cmd = map_cmd->add_subcommand(
        "classify", "classify a map against the seven continuity classes");
    std::string map_file;
    classify_cmd->add_option("file", map_file, "map description file")
        ->required();

    // verify <which>
    auto* verify_cmd =
        app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->require_subcommand(1);
    auto* implications_cmd = verify_cmd->add_subcommand(
        "implications",
        "implication hierarchy between the classes plus the full "
        "separation matrix");
    auto* equivalences_cmd = verify_cmd->add_subcommand(
        "equivalences",
        "agreement of the alternative characterizations (set level and map "
        "level)");
    auto* theorems_cmd = verify_cmd->add_subcommand(
        "theorems", "conditional claims for bijective open maps");
    auto* compositions_cmd = verify_cmd->add_subcommand(
        "compositions",
        "the ten composition clauses plus composition-failure witnesses");
    for (CLI::App* cmd : {implications_cmd, equivalences_cmd, theorems_cmd,
                          compositions_cmd}) {
        add_bounds_options(cmd, true);
    }

    // search --holds C --fails C
    auto* search_cmd = app.add_subcommand(
        "search", "find a map in one continuity class but not another");
    std::string holds_token;
    std::string fails_token;
    search_cmd->add_option("--holds", holds_token, "class the map must be in")
        ->required();
    search_cmd
        ->add_option("--fails", fails_token, "class the map must not be in")
        ->required();
    add_bounds_options(search_cmd, false);

    // repro paper
    auto* repro_cmd =
        app.add_subcommand("repro", "replay bundled reference material");
    repro_cmd->require_subcommand(1);
    auto* paper_cmd = repro_cmd->add_subcommand(
        "paper",
        "replay the bundled worked-example corpus and check every stated "
        "family and classification");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (families_cmd->parsed()) {
            const NanoSpace s = load_space(space_file);
            std::cout << (as_json ? space_families_json(s)
                                  : space_families_text(s));
            return 0;
        }
        if (classify_cmd->parsed()) {
            const auto [source, target, map] = load_map(map_file);
            const ContinuityProfile profile = classify(map, source, target);
            std::cout << (as_json
                              ? map_classify_json(source, target, map, profile)
                              : map_classify_text(source, target, map,
                                                  profile));
            return 0;
        }

        InstanceBounds bounds;
        bounds.max_size = max_size;
        bounds.seed = seed;
        bounds.mode = parse_mode(mode_name);
        bounds.pair_samples_per_combo = pair_samples;
        bounds.triple_samples_per_combo = triple_samples;

        if (implications_cmd->parsed()) {
            const ImplicationsReport rep = check_implications(bounds);
            std::cout << (as_json ? report_json(rep) : report_text(rep));
            return rep.ok() ? 0 : 1;
        }
        if (equivalences_cmd->parsed()) {
            const EquivalencesReport rep = check_equivalences(bounds);
            std::cout << (as_json ? report_json(rep) : report_text(rep));
            return rep.ok() ? 0 : 1;
        }
        if (theorems_cmd->parsed()) {
            const TheoremsReport rep = check_conditional_theorems(bounds);
            std::cout << (as_json ? report_json(rep) : report_text(rep));
            return rep.ok() ? 0 : 1;
        }
        if (compositions_cmd->parsed()) {
            const CompositionsReport rep = check_compositions(bounds);
            std::cout << (as_json ? report_json(rep) : report_text(rep));
            return rep.ok() ? 0 : 1;
        }
        if (search_cmd->parsed()) {
            const SearchReport rep =
                run_search(parse_class_or_throw(holds_token),
                           parse_class_or_throw(fails_token), bounds);
            std::cout << (as_json ? report_json(rep) : report_text(rep));
            return rep.witness.has_value() ? 0 : 1;
        }
        if (paper_cmd->parsed()) {
            const ReproReport rep = repro_worked_examples();
            std::cout << (as_json ? report_json(rep) : report_text(rep));
            return rep.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no command selected\n";
    return 2;
}
