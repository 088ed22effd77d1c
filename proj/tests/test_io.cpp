#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "lwr/io.hpp"

using namespace lwr;

namespace {

std::string fixture(const std::string& name) {
    return std::string(LWR_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("cost CSV round trip") {
    CostMatrix m = parse_cost_csv(fixture("example1.csv"));
    CHECK(m.scenarios().names() == std::vector<std::string>{"A", "B", "C"});
    CHECK(m.decisions().names() == std::vector<std::string>{"x", "y", "z"});
    CHECK(m.at("A", "x") == 4.0);
    CHECK(m.at("C", "y") == 2.0);
}

TEST_CASE("cost CSV failure modes") {
    CHECK_THROWS_AS(parse_cost_csv(fixture("header_only.csv")), ParseError);
    CHECK_THROWS_AS(parse_cost_csv(fixture("ragged.csv")), DimensionMismatch);
    CHECK_THROWS_AS(parse_cost_csv(fixture("no_such_file.csv")), ParseError);
    try {
        parse_cost_csv(fixture("bad_number.csv"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(msg.find("column 3") != std::string::npos);
    }
}

TEST_CASE("projects CSV with and without the base column") {
    AdditiveProjectInstance four = parse_projects_csv(fixture("example4_projects.csv"));
    CHECK(four.projects == std::vector<std::string>{"X", "Y"});
    CHECK(four.base == std::vector<double>{0, 8});
    CHECK(four.incremental == std::vector<std::vector<double>>{{3, 3}, {-4, -4}});

    AdditiveProjectInstance five = parse_projects_csv(fixture("example5_projects.csv"));
    CHECK(five.projects == std::vector<std::string>{"X", "Y", "Z"});
    CHECK(five.base.empty());
    CHECK(five.scenarios.names() == std::vector<std::string>{"A", "B", "C"});
}

TEST_CASE("constraints JSON") {
    ScenarioSet s2({"A", "B"});
    ProbabilityPolytope ratio = parse_constraints_json(fixture("constraints_ratio.json"), s2);
    REQUIRE(ratio.num_rows() == 2);
    // The row pair pins p_A = 2 p_B, so p = (2/3, 1/3).
    LpSolution sol = inner_max({1.0, 0.0}, ratio);
    REQUIRE(sol.status == LpStatus::OPTIMAL);
    CHECK(sol.primal[0] == Catch::Approx(2.0 / 3.0));
    CHECK(sol.primal[1] == Catch::Approx(1.0 / 3.0));

    ProbabilityPolytope empty = parse_constraints_json(fixture("constraints_empty.json"), s2);
    CHECK(empty.num_rows() == 0);

    CHECK_THROWS_AS(parse_constraints_json(fixture("constraints_unknown.json"), s2),
                    UnknownScenario);
    CHECK_THROWS_AS(parse_constraints_json(fixture("example1.csv"), s2), ParseError);
}

TEST_CASE("capacity JSON round trip") {
    CapacityStudy study = parse_capacity_json(fixture("capacity_small.json"));
    CHECK(study.voll == 17000.0);
    CHECK(study.cone == 49000.0);
    CHECK(study.lower == 20000.0);
    CHECK(study.upper == 80000.0);
    REQUIRE(study.scenarios.size() == 2);
    CHECK(study.scenarios[0].name == "lo");
    CHECK(study.scenarios[1].E == 1.2);

    // Serialize and re-parse.
    std::string tmp = fixture("roundtrip_tmp.json");
    {
        std::ofstream out(tmp, std::ios::binary);
        out << capacity_study_json(study).dump(2) << "\n";
    }
    CapacityStudy again = parse_capacity_json(tmp);
    CHECK(again.scenarios.size() == study.scenarios.size());
    CHECK(again.scenarios[1].a == study.scenarios[1].a);
    CHECK(again.voll == study.voll);
    std::remove(tmp.c_str());

    CHECK_THROWS_AS(parse_capacity_json(fixture("constraints_empty.json")), ParseError);
}

TEST_CASE("curve CSV formatting") {
    CapacityStudy study = parse_capacity_json(fixture("capacity_small.json"));
    CurveTable table = emit_curves(study, 20000.0);
    std::string csv = curves_to_csv(table);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,lo_cost,hi_cost,lo_regret,hi_regret");
    std::string first;
    std::getline(in, first);
    CHECK(first.substr(0, first.find(',')) == "20000.000000");
    // One header plus one row per grid point.
    std::size_t lines = 1;
    std::string rest;
    while (std::getline(in, rest)) ++lines;
    CHECK(lines == table.x.size());
}

TEST_CASE("fingerprints are stable") {
    CHECK(fingerprint("") == "cbf29ce484222325");
    CHECK(fingerprint("a") != fingerprint("b"));
    CHECK(fingerprint_file(fixture("example1.csv")) ==
          fingerprint("scenario,x,y,z\nA,4,0,5\nB,3,5,0\nC,3,2,0\n"));
}

TEST_CASE("selection reports are deterministic and key-sorted") {
    CostMatrix m = parse_cost_csv(fixture("example1.csv"));
    Selection sel = minimax_select(m, RegretKind::REGRET_MIN);
    std::string fp = fingerprint_file(fixture("example1.csv"));
    std::string a = selection_report("minimax-regret", sel, fp).dump(2);
    std::string b = selection_report("minimax-regret", sel, fp).dump(2);
    CHECK(a == b);
    CHECK(a.find("\"chosen\": \"x\"") != std::string::npos);
    CHECK(a.find("\"tool_version\": \"1.0.0\"") != std::string::npos);
    // Keys appear in sorted order.
    CHECK(a.find("\"active_scenarios\"") < a.find("\"argmin_set\""));
    CHECK(a.find("\"argmin_set\"") < a.find("\"chosen\""));
}
