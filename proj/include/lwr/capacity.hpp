#pragma once

// Electricity capacity-to-secure case study: exponential-decay risk cost plus
// linear procurement cost per scenario, synthetic study generation, minimax
// regret capacity recommendation and curve emission.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lwr/continuous.hpp"
#include "lwr/errors.hpp"

namespace lwr {

// Risk in scenario i decays as E * exp(-lambda * (x - a)) with capacity x.
struct CapacityScenario {
    std::string name;
    double a = 0.0;       // anchor capacity, MW
    double E = 1.0;       // risk scale, MWh at x = a
    double lambda = 1e-3; // decay rate, per MW
};

struct CapacityStudy {
    double voll = 17000.0;  // value of lost load, GBP/MWh
    double cone = 49000.0;  // cost of new entry, GBP/MW
    std::vector<CapacityScenario> scenarios;
    double lower = 0.0, upper = 0.0;  // capacity bounds, MW

    void validate() const {
        if (voll <= 0.0 || cone <= 0.0)
            throw DimensionMismatch("voll and cone must be positive");
        if (scenarios.empty()) throw EmptyScenarioSet("no capacity scenarios");
        for (const auto& s : scenarios)
            if (s.E <= 0.0 || s.lambda <= 0.0)
                throw DimensionMismatch("scenario E and lambda must be positive");
        if (!std::isfinite(lower) || !std::isfinite(upper) || lower >= upper)
            throw DimensionMismatch("capacity bounds must be finite with lower < upper");
    }
};

// C_i(x) = VOLL * E_i * exp(-lambda_i (x - a_i)) + CONE * x
inline double capacity_cost(const CapacityStudy& study, const CapacityScenario& s,
                            double x) {
    if (x < study.lower || x > study.upper)
        throw OutOfBounds("capacity outside study bounds");
    return study.voll * s.E * std::exp(-s.lambda * (x - s.a)) + study.cone * x;
}

// Closed-form per-scenario cost minimizer, clamped to the bounds:
// x = a + ln(VOLL E lambda / CONE) / lambda.
inline double scenario_optimum(const CapacityStudy& study, const CapacityScenario& s) {
    double x = s.a + std::log(study.voll * s.E * s.lambda / study.cone) / s.lambda;
    return std::clamp(x, study.lower, study.upper);
}

inline ContinuousProblem capacity_problem(const CapacityStudy& study, RegretKind kind) {
    study.validate();
    ContinuousProblem p;
    p.dimension = 1;
    p.lower = {study.lower};
    p.upper = {study.upper};
    p.kind = kind;
    for (const auto& s : study.scenarios) {
        p.scenario_names.push_back(s.name);
        p.functions.push_back(ScenarioFunction{ExpLinear{
            {s.a}, {study.voll * s.E}, {s.lambda}, {study.cone}}});
    }
    return p;
}

// Minimax-regret capacity recommendation; the determining set reported in the
// solution is the greedy-reduced scenario pair.
inline ContinuousSolution minimax_regret_capacity(const CapacityStudy& study) {
    return solve_1d(capacity_problem(study, RegretKind::REGRET_MIN));
}

// Deterministic synthetic study in the shape of a capacity report scenario
// set: a shared decay rate so that two scenarios pointwise-bound the rest.
inline CapacityStudy synth_ecr(std::uint64_t seed, std::size_t count) {
    if (count < 2) throw DimensionMismatch("synthetic study needs >= 2 scenarios");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> anchor(42000.0, 58000.0);
    std::uniform_real_distribution<double> scale(0.5, 2.0);
    std::uniform_real_distribution<double> decay(0.0009, 0.0013);

    CapacityStudy study;
    study.voll = 17000.0;
    study.cone = 49000.0;
    study.lower = 20000.0;
    study.upper = 80000.0;
    double lambda = decay(rng);
    for (std::size_t i = 0; i < count; ++i) {
        CapacityScenario s;
        s.name = (i < 5 ? "core-" : "minor-") + std::to_string(i + 1);
        s.a = anchor(rng);
        s.E = scale(rng);
        s.lambda = lambda;
        study.scenarios.push_back(s);
    }
    return study;
}

// With a shared decay rate the risk curves are multiples of exp(-lambda x):
// the scenarios with the largest and smallest coefficient E * exp(lambda a)
// bound all others pointwise. Returns {upper, lower} names, or empty if no
// shared rate / no strict extremes.
inline std::vector<std::string> pointwise_extreme_pair(const CapacityStudy& study) {
    study.validate();
    double lambda = study.scenarios.front().lambda;
    for (const auto& s : study.scenarios)
        if (s.lambda != lambda) return {};
    std::size_t hi = 0, lo = 0;
    auto coeff = [&](const CapacityScenario& s) {
        return std::log(s.E) + lambda * s.a;
    };
    for (std::size_t i = 1; i < study.scenarios.size(); ++i) {
        if (coeff(study.scenarios[i]) > coeff(study.scenarios[hi])) hi = i;
        if (coeff(study.scenarios[i]) < coeff(study.scenarios[lo])) lo = i;
    }
    if (hi == lo) return {};
    return {study.scenarios[hi].name, study.scenarios[lo].name};
}

struct CurveTable {
    std::vector<double> x;                       // MW grid
    std::vector<std::string> names;
    std::vector<std::vector<double>> cost;       // [scenario][grid]
    std::vector<std::vector<double>> regret;     // [scenario][grid]
};

// Rectangular plotting table of per-scenario cost and regret along an MW grid.
inline CurveTable emit_curves(const CapacityStudy& study, double step) {
    study.validate();
    if (step <= 0.0) throw DimensionMismatch("grid step must be positive");
    CurveTable table;
    for (double x = study.lower; x <= study.upper + 1e-9; x += step)
        table.x.push_back(std::min(x, study.upper));
    table.cost.resize(study.scenarios.size());
    table.regret.resize(study.scenarios.size());
    for (std::size_t i = 0; i < study.scenarios.size(); ++i) {
        const auto& s = study.scenarios[i];
        table.names.push_back(s.name);
        double opt = scenario_optimum(study, s);
        double best = capacity_cost(study, s, opt);
        for (double x : table.x) {
            double c = capacity_cost(study, s, x);
            table.cost[i].push_back(c);
            table.regret[i].push_back(c - best);
        }
    }
    return table;
}

}  // namespace lwr
