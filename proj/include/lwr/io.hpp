#pragma once

// File formats: cost and projects CSV, constraints and capacity-study JSON,
// report emission and content fingerprinting.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lwr/capacity.hpp"
#include "lwr/core.hpp"
#include "lwr/projects.hpp"
#include "lwr/robust.hpp"

namespace lwr {

inline constexpr const char* kToolVersion = "1.0.0";

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(field);
            field.clear();
        } else if (ch != '\r') {
            field += ch;
        }
    }
    fields.push_back(field);
    return fields;
}

inline double parse_number(const std::string& text, std::size_t line_no,
                           std::size_t col) {
    try {
        std::size_t pos = 0;
        double v = std::stod(text, &pos);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ", column " +
                         std::to_string(col) + ": not a number: '" + text + "'");
    }
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::string> row_labels;
    std::vector<std::vector<double>> rows;
};

inline CsvTable parse_labelled_csv(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": empty file");
    CsvTable table;
    table.header = split_csv_line(line);
    if (table.header.size() < 2 || table.header[0] != "scenario")
        throw ParseError(path + ": header must be 'scenario,<names...>'");
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != table.header.size())
            throw DimensionMismatch(path + ": line " + std::to_string(line_no) +
                                    ": expected " + std::to_string(table.header.size()) +
                                    " fields, got " + std::to_string(fields.size()));
        table.row_labels.push_back(fields[0]);
        std::vector<double> row;
        for (std::size_t c = 1; c < fields.size(); ++c)
            row.push_back(parse_number(fields[c], line_no, c + 1));
        table.rows.push_back(std::move(row));
    }
    if (table.rows.empty()) throw ParseError(path + ": no scenario rows");
    return table;
}

}  // namespace detail

inline CostMatrix parse_cost_csv(const std::string& path) {
    auto table = detail::parse_labelled_csv(path);
    std::vector<std::string> decisions(table.header.begin() + 1, table.header.end());
    return build_cost_matrix(table.row_labels, decisions, table.rows);
}

// Projects CSV: header 'scenario,<project names...>[,W]'; the optional final
// W column carries per-scenario base costs.
inline AdditiveProjectInstance parse_projects_csv(const std::string& path) {
    auto table = detail::parse_labelled_csv(path);
    AdditiveProjectInstance inst;
    bool has_base = table.header.back() == "W";
    std::size_t n = table.header.size() - 1 - (has_base ? 1 : 0);
    if (n == 0) throw ParseError(path + ": no project columns");
    inst.projects.assign(table.header.begin() + 1, table.header.begin() + 1 +
                                                        static_cast<std::ptrdiff_t>(n));
    inst.scenarios = ScenarioSet(table.row_labels);
    for (const auto& row : table.rows) {
        inst.incremental.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
        if (has_base) inst.base.push_back(row.back());
    }
    inst.validate();
    return inst;
}

// Constraints JSON: {"constraints": [ {scenario: coefficient, ...}, ... ]},
// each row meaning sum coeff * p <= 0.
inline ProbabilityPolytope parse_constraints_json(const std::string& path,
                                                  const ScenarioSet& scenarios) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(detail::read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("constraints") ||
        !doc["constraints"].is_array())
        throw ParseError(path + ": expected {\"constraints\": [...]}");
    ProbabilityPolytope polytope(scenarios);
    for (const auto& row : doc["constraints"]) {
        if (!row.is_object())
            throw ParseError(path + ": constraint rows must be objects");
        ProbabilityPolytope::Row r;
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!it.value().is_number())
                throw ParseError(path + ": coefficients must be numbers");
            r[it.key()] = it.value().get<double>();
        }
        polytope.add_row(r);  // throws UnknownScenario on bad labels
    }
    return polytope;
}

// Capacity study JSON: {"voll":..., "cone":..., "bounds":[lo,hi],
// "scenarios":[{"name":..., "a":..., "E":..., "lambda":...}]}
inline CapacityStudy parse_capacity_json(const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(detail::read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    CapacityStudy study;
    try {
        study.voll = doc.at("voll").get<double>();
        study.cone = doc.at("cone").get<double>();
        study.lower = doc.at("bounds").at(0).get<double>();
        study.upper = doc.at("bounds").at(1).get<double>();
        for (const auto& s : doc.at("scenarios")) {
            CapacityScenario cs;
            cs.name = s.at("name").get<std::string>();
            cs.a = s.at("a").get<double>();
            cs.E = s.at("E").get<double>();
            cs.lambda = s.at("lambda").get<double>();
            study.scenarios.push_back(cs);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    study.validate();
    return study;
}

inline nlohmann::json capacity_study_json(const CapacityStudy& study) {
    nlohmann::json doc;
    doc["voll"] = study.voll;
    doc["cone"] = study.cone;
    doc["bounds"] = {study.lower, study.upper};
    doc["scenarios"] = nlohmann::json::array();
    for (const auto& s : study.scenarios) {
        doc["scenarios"].push_back(
            {{"name", s.name}, {"a", s.a}, {"E", s.E}, {"lambda", s.lambda}});
    }
    return doc;
}

// Curve CSV: header 'x,<name>_cost...,<name>_regret...', fixed 6-decimal
// formatting for golden-file stability.
inline std::string curves_to_csv(const CurveTable& table) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6);
    os << "x";
    for (const auto& name : table.names) os << "," << name << "_cost";
    for (const auto& name : table.names) os << "," << name << "_regret";
    os << "\n";
    for (std::size_t g = 0; g < table.x.size(); ++g) {
        os << table.x[g];
        for (std::size_t i = 0; i < table.names.size(); ++i)
            os << "," << table.cost[i][g];
        for (std::size_t i = 0; i < table.names.size(); ++i)
            os << "," << table.regret[i][g];
        os << "\n";
    }
    return os.str();
}

// FNV-1a 64-bit content hash, hex encoded.
inline std::string fingerprint(const std::string& content) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char ch : content) {
        h ^= ch;
        h *= 0x100000001B3ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

inline std::string fingerprint_file(const std::string& path) {
    return fingerprint(detail::read_file(path));
}

inline nlohmann::json selection_report(const std::string& rule, const Selection& sel,
                                       const std::string& input_fingerprint) {
    nlohmann::json doc;
    doc["rule"] = rule;
    doc["chosen"] = sel.chosen;
    doc["value"] = sel.value;
    doc["argmin_set"] = sel.argmin_set;
    doc["active_scenarios"] = sel.active_scenarios;
    doc["tie_break"] = sel.tie_break;
    doc["input_fingerprint"] = input_fingerprint;
    doc["tool_version"] = kToolVersion;
    return doc;
}

}  // namespace lwr
