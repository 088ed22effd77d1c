#pragma once

// Decision rules and diagnostic probes over finite decision sets: minimax
// selection, pairwise preferences and cycles, IIA probing, rationalizability,
// the gaming construction and the extreme-risk-aversion limit.

#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lwr/core.hpp"
#include "lwr/simplex.hpp"

namespace lwr {

struct Selection {
    std::string chosen;
    std::vector<std::string> argmin_set;  // in declared decision order
    double value = 0.0;
    std::vector<std::string> active_scenarios;
    std::string tie_break;
};

namespace detail {

inline constexpr double kActiveTol = 1e-9;

inline std::vector<double> column_worst(const RegretMatrix& f) {
    std::vector<double> worst(f.num_decisions(),
                              -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < f.num_scenarios(); ++i)
        for (std::size_t j = 0; j < f.num_decisions(); ++j)
            worst[j] = std::max(worst[j], f.at(i, j));
    return worst;
}

inline Selection select_from_worst(const RegretMatrix& f,
                                   const std::vector<double>& worst) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < worst.size(); ++j)
        if (worst[j] < worst[best]) best = j;
    Selection sel;
    sel.value = worst[best];
    double tol = kActiveTol * (1.0 + std::fabs(sel.value));
    for (std::size_t j = 0; j < worst.size(); ++j)
        if (worst[j] <= sel.value + tol)
            sel.argmin_set.push_back(f.decisions().name(j));
    sel.chosen = sel.argmin_set.front();
    std::size_t chosen_idx = f.decisions().index_of(sel.chosen);
    for (std::size_t i = 0; i < f.num_scenarios(); ++i)
        if (f.at(i, chosen_idx) >= sel.value - tol)
            sel.active_scenarios.push_back(f.scenarios().name(i));
    if (sel.argmin_set.size() == 1) {
        sel.tie_break = "unique minimizer";
    } else {
        std::ostringstream os;
        os << "tie among {";
        for (std::size_t j = 0; j < sel.argmin_set.size(); ++j)
            os << (j ? "," : "") << sel.argmin_set[j];
        os << "}; chose first in declared order";
        sel.tie_break = os.str();
    }
    return sel;
}

}  // namespace detail

inline Selection minimax_select(const CostMatrix& costs, RegretKind kind) {
    RegretMatrix f = regret_transform(costs, kind);
    return detail::select_from_worst(f, detail::column_worst(f));
}

enum class Preference { FIRST, SECOND, TIE };

// Restricts to the two-column matrix, recomputes the transform there, then
// compares worst cases.
inline Preference pairwise_preference(const CostMatrix& costs, RegretKind kind,
                                      const std::string& d1, const std::string& d2) {
    std::size_t j1 = costs.decisions().index_of(d1);
    std::size_t j2 = costs.decisions().index_of(d2);
    if (j1 == j2) throw DuplicateLabel(d1);
    CostMatrix sub = costs.restrict_decisions({j1, j2});
    RegretMatrix f = regret_transform(sub, kind);
    auto worst = detail::column_worst(f);
    double tol = detail::kActiveTol * (1.0 + std::fabs(worst[0]) + std::fabs(worst[1]));
    if (worst[0] < worst[1] - tol) return Preference::FIRST;
    if (worst[1] < worst[0] - tol) return Preference::SECOND;
    return Preference::TIE;
}

// A directed 3-cycle: labels[1] beats labels[0], labels[2] beats labels[1],
// labels[0] beats labels[2] in pairwise comparison.
struct PreferenceCycle {
    std::array<std::string, 3> labels;
};

inline std::vector<PreferenceCycle> find_preference_cycles(const CostMatrix& costs,
                                                           RegretKind kind) {
    std::vector<PreferenceCycle> cycles;
    std::size_t n = costs.num_decisions();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                const std::string& la = costs.decisions().name(a);
                const std::string& lb = costs.decisions().name(b);
                const std::string& lc = costs.decisions().name(c);
                Preference ab = pairwise_preference(costs, kind, la, lb);
                Preference bc = pairwise_preference(costs, kind, lb, lc);
                Preference ca = pairwise_preference(costs, kind, lc, la);
                if (ab == Preference::SECOND && bc == Preference::SECOND &&
                    ca == Preference::SECOND) {
                    // b beats a, c beats b, a beats c
                    cycles.push_back(PreferenceCycle{{la, lb, lc}});
                } else if (ab == Preference::FIRST && bc == Preference::FIRST &&
                           ca == Preference::FIRST) {
                    // a beats b, b beats c, c beats a
                    cycles.push_back(PreferenceCycle{{lb, la, lc}});
                }
            }
        }
    }
    return cycles;
}

struct IiaFinding {
    std::string removed;
    std::string old_choice;
    std::string new_choice;
};

// For each non-chosen decision, re-run the selection with it removed and
// record any change of choice.
inline std::vector<IiaFinding> iia_probe(const CostMatrix& costs, RegretKind kind) {
    std::vector<IiaFinding> findings;
    if (costs.num_decisions() < 2) return findings;
    Selection base = minimax_select(costs, kind);
    for (std::size_t j = 0; j < costs.num_decisions(); ++j) {
        const std::string& label = costs.decisions().name(j);
        if (label == base.chosen) continue;
        Selection reduced = minimax_select(costs.drop_decision(label), kind);
        if (reduced.chosen != base.chosen)
            findings.push_back(IiaFinding{label, base.chosen, reduced.chosen});
    }
    return findings;
}

struct RationalizabilityResult {
    bool feasible = false;
    std::vector<double> probabilities;  // per scenario, present iff feasible
};

// Does any probability vector over scenarios make the target an expected-cost
// minimizer? Feasibility of {p >= 0, sum p = 1, p.C(target) <= p.C(d) for all d}.
inline RationalizabilityResult rationalizability(const CostMatrix& costs,
                                                 const std::string& target) {
    std::size_t t = costs.decisions().index_of(target);
    std::size_t s = costs.num_scenarios();
    LinearProgram lp;
    lp.num_vars = s;
    lp.objective.assign(s, 0.0);
    auto& norm = lp.add_row(LpRel::EQ, 1.0);
    std::fill(norm.coeffs.begin(), norm.coeffs.end(), 1.0);
    for (std::size_t d = 0; d < costs.num_decisions(); ++d) {
        if (d == t) continue;
        auto& row = lp.add_row(LpRel::LE, 0.0);
        for (std::size_t i = 0; i < s; ++i)
            row.coeffs[i] = costs.at(i, t) - costs.at(i, d);
    }
    LpSolution sol = solve_lp(lp);
    RationalizabilityResult result;
    result.feasible = sol.status == LpStatus::OPTIMAL;
    if (result.feasible) result.probabilities = sol.primal;
    return result;
}

struct GamingConstruction {
    std::string injected_label;
    std::vector<double> injected_costs;  // per scenario
    double M = 0.0;
    double L = 0.0;
    std::string target;
    std::string pivot_scenario;
};

struct GamingOutcome {
    GamingConstruction construction;
    CostMatrix augmented;
};

// Injects a synthetic decision that drags the target into the minimax-regret
// argmin set: cost M everywhere except C_pivot(target) - M + L at the pivot
// scenario, with L the largest row minimum. M starts at the global cost
// maximum and is raised until M - L covers the target's regret in every
// non-pivot scenario; otherwise a rival decision can still beat the target.
// Requires the target to be the strict unique cost minimizer at the pivot.
inline GamingOutcome gaming_construct(const CostMatrix& costs,
                                      const std::string& target,
                                      const std::string& pivot,
                                      const std::string& injected_label = "injected") {
    std::size_t t = costs.decisions().index_of(target);
    std::size_t k = costs.scenarios().index_of(pivot);
    for (std::size_t j = 0; j < costs.num_decisions(); ++j) {
        if (j != t && costs.at(k, j) <= costs.at(k, t))
            throw NotUniqueMinimizer(target + " is not the strict minimizer in scenario " + pivot);
    }
    double M = -std::numeric_limits<double>::infinity();
    double L = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < costs.num_scenarios(); ++i) {
        auto row = costs.row(i);
        M = std::max(M, *std::max_element(row.begin(), row.end()));
        L = std::max(L, *std::min_element(row.begin(), row.end()));
    }
    // Worst target regret outside the pivot; M must reach L plus this value.
    for (std::size_t i = 0; i < costs.num_scenarios(); ++i) {
        if (i == k) continue;
        auto row = costs.row(i);
        double m_i = *std::min_element(row.begin(), row.end());
        M = std::max(M, L + costs.at(i, t) - m_i);
    }
    GamingConstruction gc;
    gc.injected_label = injected_label;
    gc.M = M;
    gc.L = L;
    gc.target = target;
    gc.pivot_scenario = pivot;
    gc.injected_costs.resize(costs.num_scenarios(), M);
    gc.injected_costs[k] = costs.at(k, t) - M + L;

    std::vector<std::string> decisions = costs.decisions().names();
    decisions.push_back(injected_label);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < costs.num_scenarios(); ++i) {
        auto row = costs.row(i);
        row.push_back(gc.injected_costs[i]);
        rows.push_back(std::move(row));
    }
    return GamingOutcome{gc, CostMatrix(costs.scenarios(), DecisionSet(decisions),
                                        std::move(rows))};
}

// Minimizes sum_i p_i exp(k * C_i(x)) after rescaling costs to unit maximum
// magnitude. For large k this recovers the minimax-cost choice.
inline std::string risk_aversion_limit(const CostMatrix& costs,
                                       const std::vector<double>& p, double k) {
    if (p.size() != costs.num_scenarios())
        throw InvalidProbability("probability length does not match scenario count");
    double sum = 0.0;
    for (double v : p) {
        if (v < -1e-12 || !std::isfinite(v))
            throw InvalidProbability("negative or non-finite probability");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-9)
        throw InvalidProbability("probabilities do not sum to 1");
    if (k <= 0.0) throw InvalidProbability("k must be positive");

    double scale = 0.0;
    for (std::size_t i = 0; i < costs.num_scenarios(); ++i)
        for (std::size_t j = 0; j < costs.num_decisions(); ++j)
            scale = std::max(scale, std::fabs(costs.at(i, j)));
    if (scale == 0.0) scale = 1.0;

    std::size_t best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < costs.num_decisions(); ++j) {
        double v = 0.0;
        for (std::size_t i = 0; i < costs.num_scenarios(); ++i)
            v += p[i] * std::exp(k * costs.at(i, j) / scale);
        if (v < best_val - 1e-15 * (1.0 + std::fabs(v))) {
            best_val = v;
            best = j;
        }
    }
    return costs.decisions().name(best);
}

}  // namespace lwr
