#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lwr/finite.hpp"

using namespace lwr;

namespace {

CostMatrix example1() {
    return build_cost_matrix({"A", "B", "C"}, {"x", "y", "z"},
                             {{4, 0, 5}, {3, 5, 0}, {3, 2, 0}});
}

CostMatrix example3() {
    return build_cost_matrix({"A", "B", "C"}, {"x", "y", "z"},
                             {{4, 0, 2}, {4, 6, 0}, {0, 0, 5}});
}

}  // namespace

TEST_CASE("minimax regret on the worked examples") {
    Selection s1 = minimax_select(example1(), RegretKind::REGRET_MIN);
    CHECK(s1.chosen == "x");
    CHECK(s1.value == 4.0);
    CHECK(s1.argmin_set == std::vector<std::string>{"x"});
    CHECK(s1.active_scenarios == std::vector<std::string>{"A"});

    Selection s3 = minimax_select(example3(), RegretKind::REGRET_MIN);
    CHECK(s3.chosen == "x");
    CHECK(s3.value == 4.0);
}

TEST_CASE("total tie reports the whole argmin set") {
    CostMatrix m = build_cost_matrix({"A"}, {"x", "y", "z"}, {{2, 2, 2}});
    Selection s = minimax_select(m, RegretKind::COST);
    CHECK(s.chosen == "x");
    CHECK(s.argmin_set == std::vector<std::string>{"x", "y", "z"});
    CHECK(s.tie_break.find("tie") != std::string::npos);
}

TEST_CASE("pairwise preferences on the transitivity-failure example") {
    CostMatrix m = example3();
    CHECK(pairwise_preference(m, RegretKind::REGRET_MIN, "x", "y") ==
          Preference::SECOND);  // y beats x
    CHECK(pairwise_preference(m, RegretKind::REGRET_MIN, "y", "z") ==
          Preference::SECOND);  // z beats y
    CHECK(pairwise_preference(m, RegretKind::REGRET_MIN, "z", "x") ==
          Preference::SECOND);  // x beats z
}

TEST_CASE("identical columns tie") {
    CostMatrix m = build_cost_matrix({"A", "B"}, {"x", "y"}, {{1, 1}, {2, 2}});
    CHECK(pairwise_preference(m, RegretKind::REGRET_MIN, "x", "y") ==
          Preference::TIE);
}

TEST_CASE("the transitivity example has exactly one cycle") {
    auto cycles = find_preference_cycles(example3(), RegretKind::REGRET_MIN);
    REQUIRE(cycles.size() == 1);
    // y beats x, z beats y, x beats z
    CHECK(cycles[0].labels == std::array<std::string, 3>{"x", "y", "z"});
}

TEST_CASE("the non-rationalizable example has no cycle (y-z tie blocks it)") {
    auto cycles = find_preference_cycles(example1(), RegretKind::REGRET_MIN);
    CHECK(cycles.empty());
}

TEST_CASE("two-decision matrices cannot cycle") {
    CostMatrix m = build_cost_matrix({"A", "B"}, {"x", "y"}, {{1, 0}, {0, 2}});
    CHECK(find_preference_cycles(m, RegretKind::REGRET_MIN).empty());
}

TEST_CASE("IIA probe flags regret-rule violations") {
    auto f3 = iia_probe(example3(), RegretKind::REGRET_MIN);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].removed == "z");
    CHECK(f3[0].old_choice == "x");
    CHECK(f3[0].new_choice == "y");

    auto f1 = iia_probe(example1(), RegretKind::REGRET_MIN);
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].removed == "y");
    CHECK(f1[0].new_choice == "z");
    CHECK(f1[1].removed == "z");
    CHECK(f1[1].new_choice == "y");
}

TEST_CASE("minimax cost satisfies IIA under column removal") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::vector<double>> rows(3, std::vector<double>(4));
        for (auto& row : rows)
            for (auto& v : row) v = entry(rng);
        CostMatrix m = build_cost_matrix({"A", "B", "C"}, {"d0", "d1", "d2", "d3"},
                                         rows);
        CHECK(iia_probe(m, RegretKind::COST).empty());
    }
}

TEST_CASE("rationalizability of the worked example") {
    auto rx = rationalizability(example1(), "x");
    CHECK_FALSE(rx.feasible);

    auto rz = rationalizability(example1(), "z");
    REQUIRE(rz.feasible);
    double sum = 0.0;
    for (double p : rz.probabilities) {
        CHECK(p >= -1e-9);
        sum += p;
    }
    CHECK(sum == Catch::Approx(1.0));
    // The certificate makes z weakly best in expectation.
    CostMatrix m = example1();
    double ez = 0.0, ex = 0.0, ey = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        ez += rz.probabilities[i] * m.at(i, m.decisions().index_of("z"));
        ex += rz.probabilities[i] * m.at(i, m.decisions().index_of("x"));
        ey += rz.probabilities[i] * m.at(i, m.decisions().index_of("y"));
    }
    CHECK(ez <= ex + 1e-9);
    CHECK(ez <= ey + 1e-9);
}

TEST_CASE("single-scenario rationalizability is trivial for the row minimizer") {
    CostMatrix m = build_cost_matrix({"A"}, {"x", "y"}, {{2, 1}});
    auto r = rationalizability(m, "y");
    REQUIRE(r.feasible);
    CHECK(r.probabilities[0] == Catch::Approx(1.0));
    CHECK_FALSE(rationalizability(m, "x").feasible);
}

TEST_CASE("gaming construction on the worked examples") {
    auto g1 = gaming_construct(example1(), "y", "A");
    CHECK(g1.construction.M == 5.0);
    CHECK(g1.construction.L == 0.0);
    CHECK(g1.construction.injected_costs == std::vector<double>{-5, 5, 5});
    Selection s1 = minimax_select(g1.augmented, RegretKind::REGRET_MIN);
    CHECK(s1.value == 5.0);
    CHECK(s1.argmin_set == std::vector<std::string>{"y", "injected"});
    CHECK(s1.tie_break.find("tie") != std::string::npos);

    auto g3 = gaming_construct(example3(), "y", "A");
    CHECK(g3.construction.M == 6.0);
    CHECK(g3.construction.L == 0.0);
    CHECK(g3.construction.injected_costs == std::vector<double>{-6, 6, 6});
    RegretMatrix r = regret_transform(g3.augmented, RegretKind::REGRET_MIN);
    auto worst = [&](const char* d) {
        std::size_t j = r.decisions().index_of(d);
        double w = r.at(std::size_t{0}, j);
        for (std::size_t i = 1; i < 3; ++i) w = std::max(w, r.at(i, j));
        return w;
    };
    CHECK(worst("x") == 10.0);
    CHECK(worst("y") == 6.0);
    CHECK(worst("z") == 8.0);
    CHECK(worst("injected") == 6.0);
}

TEST_CASE("gaming construction rejects non-minimizing targets") {
    CHECK_THROWS_AS(gaming_construct(example1(), "x", "A"), NotUniqueMinimizer);
}

TEST_CASE("gaming construction succeeds on random valid instances") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> entry(0, 9);
    int built = 0;
    for (int trial = 0; built < 1000; ++trial) {
        std::vector<std::vector<double>> rows(4, std::vector<double>(4));
        for (auto& row : rows)
            for (auto& v : row) v = entry(rng);
        std::size_t pivot = trial % 4, target = (trial / 4) % 4;
        // Force the precondition: target strictly cheapest in the pivot row.
        double row_min = 1e18;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != target) row_min = std::min(row_min, rows[pivot][j]);
        rows[pivot][target] = row_min - 1.0;
        CostMatrix m = build_cost_matrix({"A", "B", "C", "D"},
                                         {"d0", "d1", "d2", "d3"}, rows);
        std::string tlabel = "d" + std::to_string(target);
        auto outcome = gaming_construct(m, tlabel, m.scenarios().name(pivot));
        Selection s = minimax_select(outcome.augmented, RegretKind::REGRET_MIN);
        bool in_argmin = std::find(s.argmin_set.begin(), s.argmin_set.end(),
                                   tlabel) != s.argmin_set.end();
        CHECK(in_argmin);
        ++built;
    }
}

TEST_CASE("extreme risk aversion recovers the minimax-cost choice") {
    CHECK(risk_aversion_limit(example1(), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 50.0) == "x");
    CHECK(risk_aversion_limit(example1(), {1.0, 0.0, 0.0}, 50.0) == "y");

    CostMatrix single = build_cost_matrix({"A"}, {"x", "y"}, {{3, 1}});
    CHECK(risk_aversion_limit(single, {1.0}, 2.0) == "y");

    CHECK_THROWS_AS(risk_aversion_limit(example1(), {0.5, 0.5}, 50.0),
                    InvalidProbability);
    CHECK_THROWS_AS(risk_aversion_limit(example1(), {0.9, 0.0, 0.0}, 50.0),
                    InvalidProbability);
}

TEST_CASE("argmin set is invariant under positive scaling and row shifts") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-6, 6);
    bool cost_shift_changed = false;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::vector<double>> rows(3, std::vector<double>(3));
        for (auto& row : rows)
            for (auto& v : row) v = entry(rng);
        CostMatrix m = build_cost_matrix({"A", "B", "C"}, {"x", "y", "z"}, rows);

        for (RegretKind kind :
             {RegretKind::COST, RegretKind::REGRET_MIN, RegretKind::REGRET_MEAN,
              RegretKind::REGRET_MEDIAN}) {
            auto scaled = rows;
            for (auto& row : scaled)
                for (auto& v : row) v *= 3.0;
            CHECK(minimax_select(build_cost_matrix({"A", "B", "C"}, {"x", "y", "z"},
                                                   scaled),
                                 kind)
                      .argmin_set == minimax_select(m, kind).argmin_set);
        }

        std::vector<double> shift = {static_cast<double>(entry(rng)) * 4.0,
                                     static_cast<double>(entry(rng)) * 4.0,
                                     static_cast<double>(entry(rng)) * 4.0};
        auto shifted = rows;
        for (std::size_t i = 0; i < 3; ++i)
            for (auto& v : shifted[i]) v += shift[i];
        CostMatrix ms = build_cost_matrix({"A", "B", "C"}, {"x", "y", "z"}, shifted);
        for (RegretKind kind : {RegretKind::REGRET_MIN, RegretKind::REGRET_MEAN,
                                RegretKind::REGRET_MEDIAN})
            CHECK(minimax_select(ms, kind).argmin_set ==
                  minimax_select(m, kind).argmin_set);
        if (minimax_select(ms, RegretKind::COST).argmin_set !=
            minimax_select(m, RegretKind::COST).argmin_set)
            cost_shift_changed = true;
    }
    // Scenario base costs do move the minimax-cost choice.
    CHECK(cost_shift_changed);
}
