#pragma once

// Scenario/decision universe, cost matrices and regret transforms.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "lwr/errors.hpp"

namespace lwr {

// An ordered set of distinct text labels. Order is fixed at construction and
// defines all row/column indexing throughout the library.
class LabelSet {
public:
    LabelSet() = default;

    explicit LabelSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw DimensionMismatch("label set must be non-empty");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            auto [it, inserted] = index_.emplace(names_[i], i);
            if (!inserted) throw DuplicateLabel(names_[i]);
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    bool contains(const std::string& label) const { return index_.count(label) > 0; }

    std::size_t index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw UnknownLabel(label);
        return it->second;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using ScenarioSet = LabelSet;
using DecisionSet = LabelSet;

// Which transform of the raw costs drives the minimax rule. COST is the
// identity; the regret variants subtract the row minimum, mean or median.
enum class RegretKind { COST, REGRET_MIN, REGRET_MEAN, REGRET_MEDIAN };

inline const char* to_string(RegretKind k) {
    switch (k) {
        case RegretKind::COST: return "minimax-cost";
        case RegretKind::REGRET_MIN: return "minimax-regret";
        case RegretKind::REGRET_MEAN: return "minimax-mean-regret";
        case RegretKind::REGRET_MEDIAN: return "minimax-median-regret";
    }
    return "?";
}

// A |scenarios| x |decisions| table of finite costs. Immutable after
// construction; safe to share across threads.
class CostMatrix {
public:
    CostMatrix(ScenarioSet scenarios, DecisionSet decisions,
               std::vector<std::vector<double>> rows)
        : scenarios_(std::move(scenarios)), decisions_(std::move(decisions)) {
        if (rows.size() != scenarios_.size())
            throw DimensionMismatch("row count does not match scenario count");
        costs_.reserve(scenarios_.size() * decisions_.size());
        for (const auto& row : rows) {
            if (row.size() != decisions_.size())
                throw DimensionMismatch("row length does not match decision count");
            for (double v : row) {
                if (!std::isfinite(v)) throw NonFiniteEntry("non-finite cost entry");
                costs_.push_back(v);
            }
        }
    }

    const ScenarioSet& scenarios() const { return scenarios_; }
    const DecisionSet& decisions() const { return decisions_; }
    std::size_t num_scenarios() const { return scenarios_.size(); }
    std::size_t num_decisions() const { return decisions_.size(); }

    double at(std::size_t scenario, std::size_t decision) const {
        return costs_[scenario * decisions_.size() + decision];
    }

    double at(const std::string& scenario, const std::string& decision) const {
        return at(scenarios_.index_of(scenario), decisions_.index_of(decision));
    }

    std::vector<double> row(std::size_t scenario) const {
        auto first = costs_.begin() + static_cast<std::ptrdiff_t>(scenario * decisions_.size());
        return std::vector<double>(first, first + static_cast<std::ptrdiff_t>(decisions_.size()));
    }

    std::vector<double> column(std::size_t decision) const {
        std::vector<double> col(num_scenarios());
        for (std::size_t i = 0; i < num_scenarios(); ++i) col[i] = at(i, decision);
        return col;
    }

    // New matrix restricted to the given decision indices (order preserved).
    CostMatrix restrict_decisions(const std::vector<std::size_t>& keep) const {
        std::vector<std::string> names;
        for (auto j : keep) names.push_back(decisions_.name(j));
        std::vector<std::vector<double>> rows(num_scenarios());
        for (std::size_t i = 0; i < num_scenarios(); ++i)
            for (auto j : keep) rows[i].push_back(at(i, j));
        return CostMatrix(scenarios_, DecisionSet(names), std::move(rows));
    }

    // New matrix with one scenario row removed.
    CostMatrix drop_scenario(const std::string& label) const {
        if (num_scenarios() == 1)
            throw EmptyScenarioSet("cannot drop the only scenario");
        std::size_t drop = scenarios_.index_of(label);
        std::vector<std::string> names;
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < num_scenarios(); ++i) {
            if (i == drop) continue;
            names.push_back(scenarios_.name(i));
            rows.push_back(row(i));
        }
        return CostMatrix(ScenarioSet(names), decisions_, std::move(rows));
    }

    CostMatrix drop_decision(const std::string& label) const {
        std::size_t drop = decisions_.index_of(label);
        if (num_decisions() == 1)
            throw DimensionMismatch("cannot drop the only decision");
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < num_decisions(); ++j)
            if (j != drop) keep.push_back(j);
        return restrict_decisions(keep);
    }

private:
    ScenarioSet scenarios_;
    DecisionSet decisions_;
    std::vector<double> costs_;  // row-major
};

inline CostMatrix build_cost_matrix(std::vector<std::string> scenario_names,
                                    std::vector<std::string> decision_names,
                                    std::vector<std::vector<double>> rows) {
    return CostMatrix(ScenarioSet(std::move(scenario_names)),
                      DecisionSet(std::move(decision_names)), std::move(rows));
}

using RegretMatrix = CostMatrix;

namespace detail {

inline double row_statistic(std::vector<double> vals, RegretKind kind) {
    switch (kind) {
        case RegretKind::COST:
            return 0.0;
        case RegretKind::REGRET_MIN:
            return *std::min_element(vals.begin(), vals.end());
        case RegretKind::REGRET_MEAN:
            return std::accumulate(vals.begin(), vals.end(), 0.0) /
                   static_cast<double>(vals.size());
        case RegretKind::REGRET_MEDIAN: {
            std::sort(vals.begin(), vals.end());
            std::size_t m = vals.size();
            // Even count: mean of the two central order statistics.
            if (m % 2 == 1) return vals[m / 2];
            return 0.5 * (vals[m / 2 - 1] + vals[m / 2]);
        }
    }
    return 0.0;
}

}  // namespace detail

// Entry (i, x) becomes C_i(x) minus the selected per-row statistic.
inline RegretMatrix regret_transform(const CostMatrix& costs, RegretKind kind) {
    std::vector<std::vector<double>> rows;
    rows.reserve(costs.num_scenarios());
    for (std::size_t i = 0; i < costs.num_scenarios(); ++i) {
        std::vector<double> row = costs.row(i);
        double r = detail::row_statistic(row, kind);
        for (double& v : row) v -= r;
        rows.push_back(std::move(row));
    }
    return RegretMatrix(costs.scenarios(), costs.decisions(), std::move(rows));
}

}  // namespace lwr
