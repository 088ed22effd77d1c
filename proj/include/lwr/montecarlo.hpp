#pragma once

// Randomized comparison of minimax-cost vs minimax-regret on the two-scenario
// three-decision instance family with uniform [0,1] costs. Counter-based
// per-sample random streams keyed by (seed, sample index) keep the result
// deterministic and independent of any parallel partitioning.

#include <cmath>
#include <cstdint>
#include <vector>

#include "lwr/errors.hpp"

namespace lwr {

enum class McRule { MINIMAX_COST, MINIMAX_REGRET };

struct McConfig {
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 0;
    std::vector<McRule> rules{McRule::MINIMAX_COST, McRule::MINIMAX_REGRET};
};

struct McRuleResult {
    McRule rule;
    double mean_expected_cost = 0.0;
    double standard_error = 0.0;
};

struct McResult {
    std::uint64_t samples = 0;
    std::vector<McRuleResult> per_rule;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

// Score of the decision a rule picks: the average of its two scenario costs
// (both scenarios equally likely).
inline double score_sample(const double c[2][3], McRule rule) {
    double key[3];
    for (int j = 0; j < 3; ++j) {
        if (rule == McRule::MINIMAX_COST) {
            key[j] = std::max(c[0][j], c[1][j]);
        } else {
            double m0 = std::min(std::min(c[0][0], c[0][1]), c[0][2]);
            double m1 = std::min(std::min(c[1][0], c[1][1]), c[1][2]);
            key[j] = std::max(c[0][j] - m0, c[1][j] - m1);
        }
    }
    int pick = 0;
    for (int j = 1; j < 3; ++j)
        if (key[j] < key[pick]) pick = j;  // lexicographic-first on ties
    return 0.5 * (c[0][pick] + c[1][pick]);
}

}  // namespace detail

inline McResult run_study(const McConfig& config) {
    if (config.samples < 1) throw DimensionMismatch("samples must be >= 1");
    McResult result;
    result.samples = config.samples;
    for (McRule rule : config.rules) {
        double sum = 0.0, sumsq = 0.0;
        for (std::uint64_t k = 0; k < config.samples; ++k) {
            std::uint64_t state = config.seed ^ (k * 0xD1342543DE82EF95ull + 0x2545F4914F6CDD1Dull);
            double c[2][3];
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 3; ++j) c[i][j] = detail::uniform01(state);
            double s = detail::score_sample(c, rule);
            sum += s;
            sumsq += s * s;
        }
        double n = static_cast<double>(config.samples);
        double mean = sum / n;
        double var = config.samples > 1 ? (sumsq - n * mean * mean) / (n - 1.0) : 0.0;
        McRuleResult rr;
        rr.rule = rule;
        rr.mean_expected_cost = mean;
        rr.standard_error = std::sqrt(std::max(var, 0.0) / n);
        result.per_rule.push_back(rr);
    }
    return result;
}

}  // namespace lwr
