#pragma once

// Decisions over D = {0,1}^n with independent additive costs: induced subset
// cost matrices, subset selection, the mean-regret closed form, and the
// project-IIA and essential-scenario probes.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "lwr/core.hpp"
#include "lwr/finite.hpp"

namespace lwr {

// Per-scenario incremental project costs c_i(k) plus scenario base costs W_i.
// C_i(T) = sum_{k in T} c_i(k) + W_i over all subsets T.
struct AdditiveProjectInstance {
    std::vector<std::string> projects;
    ScenarioSet scenarios{std::vector<std::string>{"_"}};
    std::vector<std::vector<double>> incremental;  // |S| x n
    std::vector<double> base;                      // |S|, default zeros

    void validate() const {
        if (projects.size() > 20)
            throw TooManyProjects("project count capped at 20");
        std::vector<std::string> seen = projects;
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw DuplicateLabel("duplicate project label");
        if (incremental.size() != scenarios.size())
            throw DimensionMismatch("incremental cost row count mismatch");
        for (const auto& row : incremental) {
            if (row.size() != projects.size())
                throw DimensionMismatch("incremental cost row length mismatch");
            for (double v : row)
                if (!std::isfinite(v)) throw NonFiniteEntry("non-finite project cost");
        }
        if (!base.empty() && base.size() != scenarios.size())
            throw DimensionMismatch("base cost length mismatch");
    }

    double base_cost(std::size_t scenario) const {
        return base.empty() ? 0.0 : base[scenario];
    }

    AdditiveProjectInstance drop_project(const std::string& label) const {
        auto it = std::find(projects.begin(), projects.end(), label);
        if (it == projects.end()) throw UnknownLabel(label);
        std::size_t drop = static_cast<std::size_t>(it - projects.begin());
        AdditiveProjectInstance out = *this;
        out.projects.erase(out.projects.begin() + static_cast<std::ptrdiff_t>(drop));
        for (auto& row : out.incremental)
            row.erase(row.begin() + static_cast<std::ptrdiff_t>(drop));
        return out;
    }

    AdditiveProjectInstance drop_scenario(const std::string& label) const {
        if (scenarios.size() == 1)
            throw EmptyScenarioSet("cannot drop the only scenario");
        std::size_t drop = scenarios.index_of(label);
        AdditiveProjectInstance out = *this;
        std::vector<std::string> names;
        out.incremental.clear();
        std::vector<double> nb;
        for (std::size_t i = 0; i < scenarios.size(); ++i) {
            if (i == drop) continue;
            names.push_back(scenarios.name(i));
            out.incremental.push_back(incremental[i]);
            if (!base.empty()) nb.push_back(base[i]);
        }
        out.scenarios = ScenarioSet(names);
        out.base = std::move(nb);
        return out;
    }
};

namespace detail {

// Subsets of {0..n-1} ordered by size then lexicographic membership.
inline std::vector<std::vector<std::size_t>> subset_order(std::size_t n) {
    std::vector<std::vector<std::size_t>> subsets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (1u << k)) s.push_back(k);
        subsets.push_back(std::move(s));
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a < b;
                     });
    return subsets;
}

inline std::string subset_label(const AdditiveProjectInstance& inst,
                                const std::vector<std::size_t>& subset) {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < subset.size(); ++k)
        os << (k ? "," : "") << inst.projects[subset[k]];
    os << "}";
    return os.str();
}

}  // namespace detail

struct SubsetSelection {
    std::vector<std::string> chosen;          // project labels, declared order
    std::string chosen_label;                 // e.g. "{X,Y}"
    double value = 0.0;
    std::vector<std::string> argmin_labels;   // subset labels in enumeration order
    std::vector<std::string> active_scenarios;
};

// The full 2^n-column cost matrix, columns ordered by subset rank.
inline CostMatrix induced_cost_matrix(const AdditiveProjectInstance& inst) {
    inst.validate();
    auto subsets = detail::subset_order(inst.projects.size());
    std::vector<std::string> decision_names;
    for (const auto& s : subsets) decision_names.push_back(detail::subset_label(inst, s));
    std::vector<std::vector<double>> rows(inst.scenarios.size());
    for (std::size_t i = 0; i < inst.scenarios.size(); ++i) {
        for (const auto& s : subsets) {
            double c = inst.base_cost(i);
            for (auto k : s) c += inst.incremental[i][k];
            rows[i].push_back(c);
        }
    }
    return CostMatrix(inst.scenarios, DecisionSet(decision_names), std::move(rows));
}

// minimax_select on the induced matrix; subset tie-break is by size then
// lexicographic membership, which the column order already encodes.
inline SubsetSelection select_projects(const AdditiveProjectInstance& inst,
                                       RegretKind kind) {
    CostMatrix induced = induced_cost_matrix(inst);
    Selection sel = minimax_select(induced, kind);
    auto subsets = detail::subset_order(inst.projects.size());
    std::size_t chosen_idx = induced.decisions().index_of(sel.chosen);
    SubsetSelection out;
    out.chosen_label = sel.chosen;
    for (auto k : subsets[chosen_idx]) out.chosen.push_back(inst.projects[k]);
    out.value = sel.value;
    out.argmin_labels = sel.argmin_set;
    out.active_scenarios = sel.active_scenarios;
    return out;
}

// Closed form for the additive mean regret: per scenario
// sum_{k in T} c_i(k) - (1/2) sum_k c_i(k); returns the max over scenarios.
inline double mean_regret_additive(const AdditiveProjectInstance& inst,
                                   const std::vector<std::string>& subset) {
    inst.validate();
    std::vector<bool> in(inst.projects.size(), false);
    for (const auto& label : subset) {
        auto it = std::find(inst.projects.begin(), inst.projects.end(), label);
        if (it == inst.projects.end()) throw UnknownLabel(label);
        in[static_cast<std::size_t>(it - inst.projects.begin())] = true;
    }
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < inst.scenarios.size(); ++i) {
        double r = 0.0;
        for (std::size_t k = 0; k < inst.projects.size(); ++k) {
            if (in[k]) r += inst.incremental[i][k];
            r -= 0.5 * inst.incremental[i][k];
        }
        worst = std::max(worst, r);
    }
    return worst;
}

struct ProjectIiaFinding {
    std::string dropped_project;
    std::string old_subset;
    std::string new_subset;
};

// Does dropping an unselected project change the chosen subset?
inline std::vector<ProjectIiaFinding> project_iia_probe(
    const AdditiveProjectInstance& inst, RegretKind kind) {
    SubsetSelection base = select_projects(inst, kind);
    std::vector<ProjectIiaFinding> findings;
    for (const auto& project : inst.projects) {
        if (std::find(base.chosen.begin(), base.chosen.end(), project) !=
            base.chosen.end())
            continue;
        SubsetSelection reduced = select_projects(inst.drop_project(project), kind);
        if (reduced.chosen != base.chosen)
            findings.push_back(ProjectIiaFinding{project, base.chosen_label,
                                                 reduced.chosen_label});
    }
    return findings;
}

struct EssentialScenarioReport {
    struct Outcome {
        std::string dropped_scenario;
        std::string new_subset;
        bool essential = false;
    };
    std::string full_subset;
    std::vector<Outcome> outcomes;
    std::size_t essential_count = 0;
};

// Re-selects with each scenario removed; a scenario is essential iff the
// chosen subset changes.
inline EssentialScenarioReport essential_scenarios(const AdditiveProjectInstance& inst,
                                                   RegretKind kind) {
    SubsetSelection base = select_projects(inst, kind);
    EssentialScenarioReport report;
    report.full_subset = base.chosen_label;
    for (const auto& scenario : inst.scenarios.names()) {
        SubsetSelection reduced = select_projects(inst.drop_scenario(scenario), kind);
        bool essential = reduced.chosen_label != base.chosen_label;
        report.outcomes.push_back({scenario, reduced.chosen_label, essential});
        if (essential) ++report.essential_count;
    }
    return report;
}

}  // namespace lwr
