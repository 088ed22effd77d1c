// Command-line front end: scenario/decision analysis, diagnostic probes,
// robust selection over probability polytopes, project portfolios, the
// capacity case study and the Monte Carlo rule comparison.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lwr/lwr.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;

lwr::RegretKind rule_from_name(const std::string& name) {
    if (name == "minimax-cost") return lwr::RegretKind::COST;
    if (name == "minimax-regret") return lwr::RegretKind::REGRET_MIN;
    if (name == "minimax-mean-regret") return lwr::RegretKind::REGRET_MEAN;
    if (name == "minimax-median-regret") return lwr::RegretKind::REGRET_MEDIAN;
    throw CLI::ValidationError("--rule", "unknown rule: " + name);
}

void print_selection(const std::string& rule, const lwr::Selection& sel) {
    std::cout << "rule: " << rule << "\n"
              << "chosen: " << sel.chosen << "\n"
              << "value: " << sel.value << "\n";
    std::cout << "argmin set:";
    for (const auto& d : sel.argmin_set) std::cout << " " << d;
    std::cout << "\nactive scenarios:";
    for (const auto& s : sel.active_scenarios) std::cout << " " << s;
    std::cout << "\ntie-break: " << sel.tie_break << "\n";
}

int run_analyze(const std::string& costs_path, const std::string& rule,
                const std::vector<std::string>& drop_decisions,
                const std::vector<std::string>& drop_scenarios,
                const std::string& report_path) {
    lwr::CostMatrix matrix = lwr::parse_cost_csv(costs_path);
    for (const auto& d : drop_decisions) matrix = matrix.drop_decision(d);
    for (const auto& s : drop_scenarios) matrix = matrix.drop_scenario(s);
    lwr::Selection sel = lwr::minimax_select(matrix, rule_from_name(rule));
    print_selection(rule, sel);
    if (!report_path.empty()) {
        auto doc = lwr::selection_report(rule, sel, lwr::fingerprint_file(costs_path));
        std::ofstream out(report_path, std::ios::binary);
        out << doc.dump(2) << "\n";
    }
    return kExitOk;
}

int run_probe(const std::string& costs_path, const std::string& rule, bool iia,
              bool cycles, const std::string& rationalize_target,
              const std::string& game_target, const std::string& game_pivot) {
    lwr::CostMatrix matrix = lwr::parse_cost_csv(costs_path);
    lwr::RegretKind kind = rule_from_name(rule);
    if (iia) {
        auto findings = lwr::iia_probe(matrix, kind);
        if (findings.empty()) {
            std::cout << "no IIA violations found\n";
        } else {
            for (const auto& f : findings)
                std::cout << "removing " << f.removed << " changes choice from "
                          << f.old_choice << " to " << f.new_choice << "\n";
        }
    } else if (cycles) {
        auto found = lwr::find_preference_cycles(matrix, kind);
        if (found.empty()) {
            std::cout << "no preference cycles\n";
        } else {
            for (const auto& c : found)
                std::cout << "cycle: " << c.labels[1] << " beats " << c.labels[0]
                          << ", " << c.labels[2] << " beats " << c.labels[1] << ", "
                          << c.labels[0] << " beats " << c.labels[2] << "\n";
        }
    } else if (!rationalize_target.empty()) {
        auto result = lwr::rationalizability(matrix, rationalize_target);
        if (result.feasible) {
            std::cout << "rationalizable; certifying probabilities:";
            for (double p : result.probabilities) std::cout << " " << p;
            std::cout << "\n";
        } else {
            std::cout << "not rationalizable: no scenario probabilities make "
                      << rationalize_target << " an expected-cost minimizer\n";
        }
    } else if (!game_target.empty()) {
        auto outcome = lwr::gaming_construct(matrix, game_target, game_pivot);
        std::cout << "injected decision '" << outcome.construction.injected_label
                  << "' with M=" << outcome.construction.M
                  << " L=" << outcome.construction.L << " costs:";
        for (double c : outcome.construction.injected_costs) std::cout << " " << c;
        std::cout << "\n";
        lwr::Selection sel =
            lwr::minimax_select(outcome.augmented, lwr::RegretKind::REGRET_MIN);
        print_selection("minimax-regret (augmented)", sel);
    } else {
        std::cerr << "probe: one of --iia, --cycles, --rationalize, --game required\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_robust(const std::string& costs_path, const std::string& constraints_path,
               const std::string& rule) {
    lwr::CostMatrix matrix = lwr::parse_cost_csv(costs_path);
    auto polytope = lwr::parse_constraints_json(constraints_path, matrix.scenarios());
    lwr::Selection sel =
        lwr::robust_select_finite(matrix, rule_from_name(rule), polytope);
    print_selection(rule + " (robust)", sel);
    return kExitOk;
}

int run_projects(const std::string& costs_path, const std::string& base_path,
                 const std::string& rule,
                 const std::vector<std::string>& drop_projects, bool essential,
                 bool iia) {
    lwr::AdditiveProjectInstance inst = lwr::parse_projects_csv(costs_path);
    if (!base_path.empty()) {
        auto base = lwr::parse_cost_csv(base_path);
        if (base.scenarios().names() != inst.scenarios.names())
            throw lwr::DimensionMismatch("base cost scenarios do not match");
        inst.base.clear();
        for (std::size_t i = 0; i < base.num_scenarios(); ++i)
            inst.base.push_back(base.at(i, std::size_t{0}));
    }
    for (const auto& p : drop_projects) inst = inst.drop_project(p);
    lwr::RegretKind kind = rule_from_name(rule);
    auto sel = lwr::select_projects(inst, kind);
    std::cout << "rule: " << rule << "\nchosen subset: " << sel.chosen_label
              << "\nvalue: " << sel.value << "\n";
    if (iia) {
        auto findings = lwr::project_iia_probe(inst, kind);
        if (findings.empty()) {
            std::cout << "no project-IIA violations found\n";
        } else {
            for (const auto& f : findings)
                std::cout << "dropping " << f.dropped_project << " changes "
                          << f.old_subset << " to " << f.new_subset << "\n";
        }
    }
    if (essential) {
        auto report = lwr::essential_scenarios(inst, kind);
        for (const auto& o : report.outcomes)
            std::cout << "drop " << o.dropped_scenario << " -> " << o.new_subset
                      << (o.essential ? " (essential)" : "") << "\n";
        std::cout << "essential scenarios: " << report.essential_count << " of "
                  << report.outcomes.size() << "\n";
    }
    return kExitOk;
}

int run_capacity(const std::string& model_path, const std::string& curves_path,
                 double grid_step, bool reduce) {
    lwr::CapacityStudy study = lwr::parse_capacity_json(model_path);
    auto sol = lwr::minimax_regret_capacity(study);
    std::cout << "capacity-to-secure: " << sol.x_star[0] << " MW\n"
              << "worst regret: " << sol.value << " GBP\n";
    std::cout << "determining scenarios:";
    for (const auto& s : sol.determining) std::cout << " " << s;
    std::cout << "\n";
    if (reduce) {
        auto pair = lwr::pointwise_extreme_pair(study);
        if (pair.empty()) {
            std::cout << "no shared decay rate; pointwise reduction unavailable\n";
        } else {
            std::cout << "pointwise-extreme pair: " << pair[0] << " " << pair[1]
                      << "\n";
        }
    }
    if (!curves_path.empty()) {
        auto table = lwr::emit_curves(study, grid_step);
        std::ofstream out(curves_path, std::ios::binary);
        out << lwr::curves_to_csv(table);
        std::cout << "curves written to " << curves_path << "\n";
    }
    return kExitOk;
}

int run_montecarlo(std::uint64_t samples, std::uint64_t seed) {
    lwr::McConfig config;
    config.samples = samples;
    config.seed = seed;
    auto result = lwr::run_study(config);
    for (const auto& rr : result.per_rule) {
        const char* name =
            rr.rule == lwr::McRule::MINIMAX_COST ? "minimax-cost" : "minimax-regret";
        std::cout << name << ": mean expected cost " << rr.mean_expected_cost
                  << " (stderr " << rr.standard_error << ", samples "
                  << result.samples << ")\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimax and minimax-regret decision analysis"};
    app.require_subcommand(1);

    std::string costs_path, constraints_path, base_path, model_path;
    std::string rule = "minimax-regret";
    std::string report_path, curves_path;
    std::string rationalize_target, game_target, game_pivot;
    std::vector<std::string> drop_decisions, drop_scenarios, drop_projects;
    bool flag_iia = false, flag_cycles = false, flag_essential = false,
         flag_reduce = false;
    double grid_step = 100.0;
    std::uint64_t mc_samples = 1000000, mc_seed = 0;

    auto* analyze = app.add_subcommand("analyze", "Minimax selection on a cost matrix");
    analyze->add_option("--costs", costs_path, "cost CSV")->required();
    analyze->add_option("--rule", rule, "decision rule");
    analyze->add_option("--drop-decision", drop_decisions, "decision(s) to remove");
    analyze->add_option("--drop-scenario", drop_scenarios, "scenario(s) to remove");
    analyze->add_option("--report", report_path, "machine report JSON output");

    auto* probe = app.add_subcommand("probe", "Diagnostic probes");
    probe->add_option("--costs", costs_path, "cost CSV")->required();
    probe->add_option("--rule", rule, "decision rule");
    probe->add_flag("--iia", flag_iia, "IIA violation probe");
    probe->add_flag("--cycles", flag_cycles, "preference cycle enumeration");
    probe->add_option("--rationalize", rationalize_target, "rationalizability target");
    probe->add_option("--game", game_target, "gaming construction target");
    probe->add_option("--pivot", game_pivot, "gaming pivot scenario");

    auto* robust = app.add_subcommand("robust", "Robust selection over a polytope");
    robust->add_option("--costs", costs_path, "cost CSV")->required();
    robust->add_option("--constraints", constraints_path, "constraints JSON")->required();
    robust->add_option("--rule", rule, "decision rule");

    auto* projects = app.add_subcommand("projects", "Project portfolio selection");
    projects->add_option("--costs", costs_path, "projects CSV")->required();
    projects->add_option("--base", base_path, "base cost CSV (scenario,W)");
    projects->add_option("--rule", rule, "decision rule");
    projects->add_option("--drop-project", drop_projects, "project(s) to remove");
    projects->add_flag("--essential", flag_essential, "essential scenario probe");
    projects->add_flag("--iia", flag_iia, "project-IIA probe");

    auto* capacity = app.add_subcommand("capacity", "Capacity-to-secure case study");
    capacity->add_option("--model", model_path, "study JSON")->required();
    capacity->add_option("--curves", curves_path, "curve CSV output");
    capacity->add_option("--grid-step", grid_step, "curve grid step in MW");
    capacity->add_flag("--reduce", flag_reduce, "report the pointwise-extreme pair");

    auto* montecarlo = app.add_subcommand("montecarlo", "Rule comparison study");
    montecarlo->add_option("--samples", mc_samples, "sample count");
    montecarlo->add_option("--seed", mc_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed())
            return run_analyze(costs_path, rule, drop_decisions, drop_scenarios,
                               report_path);
        if (probe->parsed())
            return run_probe(costs_path, rule, flag_iia, flag_cycles,
                             rationalize_target, game_target, game_pivot);
        if (robust->parsed()) return run_robust(costs_path, constraints_path, rule);
        if (projects->parsed())
            return run_projects(costs_path, base_path, rule, drop_projects,
                                flag_essential, flag_iia);
        if (capacity->parsed())
            return run_capacity(model_path, curves_path, grid_step, flag_reduce);
        if (montecarlo->parsed()) return run_montecarlo(mc_samples, mc_seed);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lwr::NumericFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const lwr::IterationLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const lwr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}
