// End-to-end tests for the command-line tool: spawn the real binary, check
// exit codes, and compare byte-for-byte against the golden outputs kept in
// corpus/expected/.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string command =
        std::string("\"") + NANOTOP_CLI_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.output.append(buf, n);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string corpus_path(const std::string& name) {
    return std::string(NANOTOP_CORPUS_DIR) + "/" + name;
}

std::string read_expected(const std::string& name) {
    const std::string path = corpus_path("expected/" + name);
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file: " << path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void check_against_golden(const std::string& args, const std::string& golden,
                          int expected_exit = 0) {
    const RunResult r = run_cli(args);
    CHECK_MESSAGE(r.exit_code == expected_exit, "command: " << args << "\n"
                                                            << r.output);
    CHECK_MESSAGE(r.output == read_expected(golden), "golden mismatch for "
                                                         << golden);
}

}  // namespace

TEST_CASE("space families against goldens") {
    check_against_golden("space families " + corpus_path("ex2_2.space"),
                         "ex2_2_families.txt");
    check_against_golden("--json space families " + corpus_path("ex2_2.space"),
                         "ex2_2_families.json");
    check_against_golden(
        "--json space families " + corpus_path("ex3_22u.space"),
        "ex3_22u_families.json");
    check_against_golden("space families " + corpus_path("ex3_14v.space"),
                         "ex3_14v_families.txt");
}

TEST_CASE("map classification against goldens") {
    for (const char* name :
         {"ex3_5", "ex3_6", "ex3_9", "ex3_14", "ex3_16", "ex3_19", "ex3_22_h1",
          "ex3_22_h2", "ex3_22_comp"}) {
        check_against_golden(
            "map classify " + corpus_path(std::string(name) + ".map"),
            std::string(name) + "_classify.txt");
    }
}

TEST_CASE("replaying the bundled corpus") {
    check_against_golden("repro paper", "repro.txt");
    check_against_golden("--json repro paper", "repro.json");
    const RunResult r = run_cli("repro paper");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("known discrepancy: ex3_14 V") != std::string::npos);
    CHECK(r.output.find("known discrepancy: ex3_22 U") != std::string::npos);
    CHECK(r.output.find("known discrepancy: ex3_22 V") != std::string::npos);
    CHECK(r.output.find("result: PASS") != std::string::npos);
}

TEST_CASE("verification sweeps: exit codes and golden JSON") {
    check_against_golden("--json verify implications --max-size 2",
                         "implications_max2.json");

    const RunResult imp = run_cli("verify implications --max-size 2");
    CHECK(imp.exit_code == 0);
    CHECK(imp.output.find("result: PASS") != std::string::npos);

    const RunResult eq =
        run_cli("verify equivalences --max-size 2 --mode both");
    CHECK(eq.exit_code == 0);

    const RunResult th =
        run_cli("verify theorems --max-size 2 --mode explicit");
    CHECK(th.exit_code == 0);

    // The composition sweep's success flag includes the witness searches;
    // whatever it reports, the exit code must agree with the JSON "ok".
    const RunResult co = run_cli("--json verify compositions --max-size 2");
    const bool ok_field = co.output.find("\"ok\": true") != std::string::npos;
    CHECK(co.exit_code == (ok_field ? 0 : 1));
}

TEST_CASE("verification output is deterministic across runs") {
    const std::string args = "--json verify implications --max-size 3";
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    CHECK(first.output == second.output);
}

TEST_CASE("witness searches") {
    check_against_golden("search --holds NSa --fails N --max-size 3",
                         "search_nsa_not_n_max3.txt");

    // Vacuous: same class on both sides can never separate.
    const RunResult vac = run_cli("search --holds N --fails N --max-size 2");
    CHECK(vac.exit_code == 1);
    CHECK(vac.output.find("no witness (vacuous)") != std::string::npos);

    // Implied arrow: exhaustive scan comes back empty-handed.
    const RunResult none = run_cli("search --holds N --fails Na --max-size 3");
    CHECK(none.exit_code == 1);

    const RunResult bad = run_cli("search --holds N --fails Nb --max-size 2");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("unknown continuity class 'Nb'") !=
          std::string::npos);
}

TEST_CASE("input and usage errors exit with 2") {
    const RunResult missing =
        run_cli("space families " + corpus_path("no_such.space"));
    CHECK(missing.exit_code == 2);
    CHECK(missing.output.find("error: cannot open file") != std::string::npos);

    const std::string bad_path =
        (std::filesystem::temp_directory_path() / "nanotop_bad.space")
            .string();
    {
        std::ofstream out(bad_path, std::ios::binary);
        out << "points: a b\nclasses: [a] [b]\n";  // no subset line
    }
    const RunResult malformed = run_cli("space families " + bad_path);
    CHECK(malformed.exit_code == 2);
    CHECK(malformed.output.find("'classes:' requires a 'subset:' line") !=
          std::string::npos);
    std::remove(bad_path.c_str());

    const RunResult badmode =
        run_cli("verify implications --max-size 2 --mode fuzzy");
    CHECK(badmode.exit_code == 2);
    CHECK(badmode.output.find("unknown mode 'fuzzy'") != std::string::npos);

    const RunResult badsize = run_cli("verify implications --max-size 0");
    CHECK(badsize.exit_code == 2);

    const RunResult nocmd = run_cli("");
    CHECK(nocmd.exit_code == 2);

    const RunResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("space") != std::string::npos);
}
