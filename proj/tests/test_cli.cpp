#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LWR_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        result.output.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture(const std::string& name) {
    return std::string(LWR_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("analyze reports the minimax-regret choice") {
    RunResult r = run_cli("analyze --costs " + fixture("example1.csv") +
                          " --rule minimax-regret");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("chosen: x") != std::string::npos);
    CHECK(r.output.find("value: 4") != std::string::npos);
}

TEST_CASE("analyze honors drop flags") {
    RunResult r = run_cli("analyze --costs " + fixture("example1.csv") +
                          " --rule minimax-regret --drop-decision z");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("chosen: y") != std::string::npos);
}

TEST_CASE("analyze writes byte-identical reports") {
    std::string rep1 = fixture("tmp_report1.json");
    std::string rep2 = fixture("tmp_report2.json");
    std::string base = "analyze --costs " + fixture("example1.csv") +
                       " --rule minimax-regret --report ";
    CHECK(run_cli(base + rep1).exit_code == 0);
    CHECK(run_cli(base + rep2).exit_code == 0);
    std::string a = slurp(rep1), b = slurp(rep2);
    CHECK_FALSE(a.empty());
    CHECK(a == b);
    CHECK(a.find("\"chosen\": \"x\"") != std::string::npos);
    std::remove(rep1.c_str());
    std::remove(rep2.c_str());
}

TEST_CASE("missing input file exits with the parse code") {
    RunResult r = run_cli("analyze --costs " + fixture("absent.csv") +
                          " --rule minimax-regret");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error") != std::string::npos);
}

TEST_CASE("usage errors exit with the usage code") {
    CHECK(run_cli("analyze").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("probe --costs " + fixture("example1.csv")).exit_code == 1);
}

TEST_CASE("unknown rule exits with the usage code") {
    RunResult r = run_cli("analyze --costs " + fixture("example1.csv") +
                          " --rule maximax");
    CHECK(r.exit_code == 1);
}

TEST_CASE("probe subcommand modes") {
    RunResult iia = run_cli("probe --costs " + fixture("example3.csv") +
                            " --rule minimax-regret --iia");
    CHECK(iia.exit_code == 0);
    CHECK(iia.output.find("removing z changes choice from x to y") !=
          std::string::npos);

    RunResult cyc = run_cli("probe --costs " + fixture("example3.csv") +
                            " --rule minimax-regret --cycles");
    CHECK(cyc.exit_code == 0);
    CHECK(cyc.output.find("cycle: y beats x, z beats y, x beats z") !=
          std::string::npos);

    RunResult rat = run_cli("probe --costs " + fixture("example1.csv") +
                            " --rationalize x");
    CHECK(rat.exit_code == 0);
    CHECK(rat.output.find("not rationalizable") != std::string::npos);

    RunResult game = run_cli("probe --costs " + fixture("example1.csv") +
                             " --game y --pivot A");
    CHECK(game.exit_code == 0);
    CHECK(game.output.find("M=5") != std::string::npos);
    CHECK(game.output.find("argmin set: y injected") != std::string::npos);
}

TEST_CASE("robust subcommand with a ratio constraint") {
    RunResult r = run_cli("robust --costs " + fixture("example1.csv") +
                          " --constraints " + fixture("constraints_uniform.json") +
                          " --rule minimax-cost");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("chosen: z") != std::string::npos);

    RunResult bad = run_cli("robust --costs " + fixture("example1.csv") +
                            " --constraints " + fixture("constraints_unknown.json") +
                            " --rule minimax-cost");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("projects subcommand reports selection and probes") {
    RunResult r = run_cli("projects --costs " + fixture("example5_projects.csv") +
                          " --rule minimax-regret --iia");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("chosen subset: {Y}") != std::string::npos);
    CHECK(r.output.find("value: 2") != std::string::npos);
    CHECK(r.output.find("dropping Z changes {Y} to {X,Y}") != std::string::npos);

    RunResult ess = run_cli("projects --costs " + fixture("appendix_projects.csv") +
                            " --rule minimax-regret --essential");
    CHECK(ess.exit_code == 0);
    CHECK(ess.output.find("chosen subset: {}") != std::string::npos);
    CHECK(ess.output.find("essential scenarios: 5 of 5") != std::string::npos);

    RunResult w = run_cli("projects --costs " + fixture("example4_projects.csv") +
                          " --rule minimax-regret");
    CHECK(w.exit_code == 0);
    CHECK(w.output.find("chosen subset: {X}") != std::string::npos);
    CHECK(w.output.find("value: 4") != std::string::npos);
}

TEST_CASE("capacity subcommand writes curves and reports the pair") {
    std::string curves = fixture("tmp_curves.csv");
    RunResult r = run_cli("capacity --model " + fixture("capacity_small.json") +
                          " --curves " + curves + " --grid-step 10000 --reduce");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("capacity-to-secure:") != std::string::npos);
    CHECK(r.output.find("pointwise-extreme pair:") != std::string::npos);
    std::string csv = slurp(curves);
    CHECK(csv.rfind("x,lo_cost,hi_cost,lo_regret,hi_regret\n", 0) == 0);
    std::remove(curves.c_str());
}

TEST_CASE("montecarlo subcommand is deterministic") {
    std::string args = "montecarlo --samples 20000 --seed 42";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("minimax-cost: mean expected cost") != std::string::npos);
    CHECK(a.output.find("minimax-regret: mean expected cost") != std::string::npos);
}
