#pragma once

// Probability polytopes over the scenario simplex, the inner maximization LP
// and its dual certificate, robust finite selection, and block-diagonal
// decomposition of the constraint matrix.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lwr/core.hpp"
#include "lwr/finite.hpp"
#include "lwr/simplex.hpp"

namespace lwr {

// The ambiguity set {p : Ap <= 0, p >= 0, sum p = 1}. Each row is a sparse
// mapping scenario -> coefficient encoding one inequality sum_i a_i p_i <= 0;
// the simplex constraints are always implicit.
class ProbabilityPolytope {
public:
    using Row = std::map<std::string, double>;

    explicit ProbabilityPolytope(ScenarioSet scenarios, std::vector<Row> rows = {})
        : scenarios_(std::move(scenarios)) {
        for (auto& row : rows) add_row(row);
    }

    void add_row(const Row& row) {
        std::vector<double> dense(scenarios_.size(), 0.0);
        for (const auto& [label, coeff] : row) {
            if (!scenarios_.contains(label)) throw UnknownScenario(label);
            if (!std::isfinite(coeff)) throw NonFiniteEntry("non-finite constraint coefficient");
            dense[scenarios_.index_of(label)] = coeff;
        }
        rows_.push_back(std::move(dense));
    }

    // Convenience: pin exact probabilities via paired ratio rows
    // p_i * q_j - p_j * q_i <= 0 in both directions.
    void pin_probabilities(const std::vector<double>& p) {
        if (p.size() != scenarios_.size())
            throw DimensionMismatch("pinned probability length mismatch");
        for (std::size_t i = 1; i < p.size(); ++i) {
            std::vector<double> dense(scenarios_.size(), 0.0);
            dense[0] = p[i];
            dense[i] = -p[0];
            rows_.push_back(dense);
            for (double& v : dense) v = -v;
            rows_.push_back(dense);
        }
    }

    const ScenarioSet& scenarios() const { return scenarios_; }
    std::size_t num_rows() const { return rows_.size(); }
    const std::vector<double>& row(std::size_t r) const { return rows_[r]; }

    // Polytope over a subset of scenarios, keeping the rows fully supported
    // inside that subset. Rows straddling the subset boundary are rejected.
    ProbabilityPolytope restrict(const std::vector<std::string>& keep) const {
        ScenarioSet sub(keep);
        ProbabilityPolytope out(sub);
        for (const auto& dense : rows_) {
            std::vector<double> sub_row(keep.size(), 0.0);
            bool inside = true, touches = false;
            for (std::size_t i = 0; i < dense.size(); ++i) {
                if (dense[i] == 0.0) continue;
                const std::string& label = scenarios_.name(i);
                if (sub.contains(label)) {
                    sub_row[sub.index_of(label)] = dense[i];
                    touches = true;
                } else {
                    inside = false;
                }
            }
            if (touches && !inside)
                throw DimensionMismatch("constraint row straddles the scenario subset");
            if (touches) {
                Row r;
                for (std::size_t i = 0; i < keep.size(); ++i)
                    if (sub_row[i] != 0.0) r[keep[i]] = sub_row[i];
                out.add_row(r);
            }
        }
        return out;
    }

private:
    ScenarioSet scenarios_;
    std::vector<std::vector<double>> rows_;  // dense, one per constraint
};

// maximize sum_i p_i values[i] over the polytope. With no constraint rows the
// answer is the plain maximum with unit mass on the lexicographically-first
// (declared-order-first) maximizer.
inline LpSolution inner_max(const std::vector<double>& values,
                            const ProbabilityPolytope& polytope) {
    std::size_t s = polytope.scenarios().size();
    if (values.size() != s)
        throw DimensionMismatch("value vector length does not match scenario count");
    if (polytope.num_rows() == 0) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < s; ++i)
            if (values[i] > values[best]) best = i;
        LpSolution sol;
        sol.status = LpStatus::OPTIMAL;
        sol.objective = values[best];
        sol.primal.assign(s, 0.0);
        sol.primal[best] = 1.0;
        return sol;
    }
    LinearProgram lp;
    lp.num_vars = s;
    lp.objective = values;
    auto& norm = lp.add_row(LpRel::EQ, 1.0);
    std::fill(norm.coeffs.begin(), norm.coeffs.end(), 1.0);
    for (std::size_t r = 0; r < polytope.num_rows(); ++r) {
        auto& row = lp.add_row(LpRel::LE, 0.0);
        row.coeffs = polytope.row(r);
    }
    return solve_lp(lp);
}

struct DualCertificate {
    double w = 0.0;
    std::vector<double> q;  // one non-negative multiplier per constraint row
};

// Solves the dual program: minimize w subject to w + (A^T q)_i >= values[i],
// q >= 0, w free. At optimum w equals the inner_max objective.
inline DualCertificate dual_certificate(const std::vector<double>& values,
                                        const ProbabilityPolytope& polytope) {
    std::size_t s = polytope.scenarios().size();
    std::size_t m = polytope.num_rows();
    if (values.size() != s)
        throw DimensionMismatch("value vector length does not match scenario count");
    LinearProgram lp;
    lp.num_vars = 1 + m;  // w, q_1..q_m
    lp.objective.assign(lp.num_vars, 0.0);
    lp.objective[0] = -1.0;  // maximize -w
    lp.free_vars.assign(lp.num_vars, false);
    lp.free_vars[0] = true;
    for (std::size_t i = 0; i < s; ++i) {
        auto& row = lp.add_row(LpRel::GE, values[i]);
        row.coeffs[0] = 1.0;
        for (std::size_t r = 0; r < m; ++r) row.coeffs[1 + r] = polytope.row(r)[i];
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::OPTIMAL)
        throw NumericFailure("dual program did not solve to optimality");
    DualCertificate cert;
    cert.w = sol.primal[0];
    cert.q.assign(sol.primal.begin() + 1, sol.primal.end());
    return cert;
}

// RO(P_A) over a finite decision set: transform, evaluate the inner LP per
// column, take the minimizing decision with lexicographic tie-break.
inline Selection robust_select_finite(const CostMatrix& costs, RegretKind kind,
                                      const ProbabilityPolytope& polytope) {
    if (polytope.scenarios().names() != costs.scenarios().names())
        throw DimensionMismatch("polytope scenarios do not match cost matrix");
    RegretMatrix f = regret_transform(costs, kind);
    std::vector<double> worst(f.num_decisions());
    std::vector<std::vector<double>> maximizers(f.num_decisions());
    for (std::size_t j = 0; j < f.num_decisions(); ++j) {
        LpSolution sol = inner_max(f.column(j), polytope);
        if (sol.status != LpStatus::OPTIMAL)
            throw NumericFailure("inner maximization infeasible over the polytope");
        worst[j] = sol.objective;
        maximizers[j] = sol.primal;
    }
    Selection sel = detail::select_from_worst(f, worst);
    // Active scenarios under the robust rule: support of the maximizing p.
    std::size_t chosen = f.decisions().index_of(sel.chosen);
    sel.active_scenarios.clear();
    for (std::size_t i = 0; i < f.num_scenarios(); ++i)
        if (maximizers[chosen][i] > 1e-9)
            sel.active_scenarios.push_back(f.scenarios().name(i));
    return sel;
}

struct BlockStructure {
    // Disjoint components covering all scenarios; every constraint row's
    // support lies inside one component. Ordered by first scenario index.
    std::vector<std::vector<std::string>> components;
};

inline BlockStructure block_structure(const ProbabilityPolytope& polytope) {
    std::size_t s = polytope.scenarios().size();
    std::vector<std::size_t> parent(s);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t r = 0; r < polytope.num_rows(); ++r) {
        const auto& row = polytope.row(r);
        std::size_t first = SIZE_MAX;
        for (std::size_t i = 0; i < s; ++i) {
            if (row[i] == 0.0) continue;
            if (first == SIZE_MAX) first = find(i);
            else parent[find(i)] = first = find(first);
        }
    }
    std::vector<std::vector<std::string>> by_root(s);
    for (std::size_t i = 0; i < s; ++i)
        by_root[find(i)].push_back(polytope.scenarios().name(i));
    BlockStructure bs;
    for (auto& group : by_root)
        if (!group.empty()) bs.components.push_back(std::move(group));
    return bs;
}

// Optimal value of the component LP: maximize sum p_i values_i over the
// polytope restricted to the component with sum_{i in component} p_i = 1.
inline double component_value(const std::vector<double>& component_values,
                              const ProbabilityPolytope& polytope,
                              const std::vector<std::string>& component) {
    ProbabilityPolytope sub = polytope.restrict(component);
    LpSolution sol = inner_max(component_values, sub);
    if (sol.status != LpStatus::OPTIMAL)
        throw NumericFailure("component LP infeasible");
    return sol.objective;
}

}  // namespace lwr
