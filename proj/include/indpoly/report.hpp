#pragma once

/*
 * report.hpp
 * ----------
 * The per-expression analysis record and its two renderings (JSON and
 * plain text). JSON field order is fixed so identical invocations produce
 * byte-identical reports.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "indpoly/engine.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/shape.hpp"

namespace indpoly {

using json = nlohmann::ordered_json;

enum class FlagState { yes, no, skipped };

struct AnalysisReport {
    std::string expression;
    bool materialized = false;
    int vertices = 0;
    int edges = 0;
    int alpha_value = 0;
    Polynomial poly;
    ShapeReport shape;
    FlagState tree = FlagState::skipped;
    FlagState claw_free = FlagState::skipped;
    FlagState well_covered = FlagState::skipped;
    FlagState very_well_covered = FlagState::skipped;
};

namespace detail {

inline json flag_json(FlagState f) {
    switch (f) {
        case FlagState::yes: return true;
        case FlagState::no: return false;
        case FlagState::skipped: return "skipped(capacity)";
    }
    return nullptr;
}

inline const char* flag_text(FlagState f) {
    switch (f) {
        case FlagState::yes: return "yes";
        case FlagState::no: return "no";
        case FlagState::skipped: return "skipped(capacity)";
    }
    return "?";
}

inline json coefficient_strings(const Polynomial& p) {
    json arr = json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

inline json modes_json(const std::vector<int>& modes) {
    json arr = json::array();
    for (int m : modes) arr.push_back(m);
    return arr;
}

}  // namespace detail

// Fills the graph-derived parts of the report; alpha is the polynomial degree.
inline AnalysisReport make_analysis_report(const std::string& expression,
                                           const Graph* g, Polynomial poly) {
    AnalysisReport r;
    r.expression = expression;
    r.poly = std::move(poly);
    r.shape = analyze_shape(r.poly);
    r.alpha_value = r.poly.degree();
    if (g) {
        r.materialized = true;
        r.vertices = g->vertex_count();
        r.edges = g->edge_count();
        r.tree = is_tree(*g) ? FlagState::yes : FlagState::no;
        r.claw_free = is_claw_free(*g) ? FlagState::yes : FlagState::no;
        if (g->vertex_count() <= 32) {
            bool wc = is_well_covered(*g);
            r.well_covered = wc ? FlagState::yes : FlagState::no;
            r.very_well_covered =
                (wc && is_very_well_covered(*g)) ? FlagState::yes : FlagState::no;
        }
    }
    return r;
}

inline json analysis_to_json(const AnalysisReport& r) {
    json j;
    j["command"] = "analyze";
    j["expression"] = r.expression;
    j["materialized"] = r.materialized;
    if (r.materialized) {
        j["vertices"] = r.vertices;
        j["edges"] = r.edges;
    } else {
        j["vertices"] = "closed-form-only";
        j["edges"] = "closed-form-only";
    }
    j["alpha"] = r.alpha_value;
    j["degree"] = r.shape.degree;
    j["coefficients"] = detail::coefficient_strings(r.poly);
    j["unimodal"] = r.shape.unimodal;
    j["modes"] = detail::modes_json(r.shape.mode_indices);
    j["log_concave"] = r.shape.log_concave;
    j["real_root_count"] = r.shape.real_root_count;
    j["all_roots_real"] = r.shape.all_roots_real;
    j["tree"] = detail::flag_json(r.tree);
    j["claw_free"] = detail::flag_json(r.claw_free);
    j["well_covered"] = detail::flag_json(r.well_covered);
    j["very_well_covered"] = detail::flag_json(r.very_well_covered);
    return j;
}

inline std::string analysis_to_text(const AnalysisReport& r) {
    std::string out;
    out += "expression:         " + r.expression + "\n";
    if (r.materialized) {
        out += "graph:              " + std::to_string(r.vertices) + " vertices, " +
               std::to_string(r.edges) + " edges\n";
    } else {
        out += "graph:              closed-form-only\n";
    }
    out += "alpha:              " + std::to_string(r.alpha_value) + "\n";
    out += "coefficients:       " + r.poly.to_string() + "\n";
    out += "unimodal:           " + std::string(r.shape.unimodal ? "yes" : "no");
    out += " (modes:";
    for (int m : r.shape.mode_indices) out += " " + std::to_string(m);
    out += ")\n";
    out += "log-concave:        " + std::string(r.shape.log_concave ? "yes" : "no") + "\n";
    out += "real roots:         " + std::to_string(r.shape.real_root_count) + " of " +
           std::to_string(r.shape.degree) +
           (r.shape.all_roots_real ? " (all real)" : " (not all real)") + "\n";
    out += "tree:               " + std::string(detail::flag_text(r.tree)) + "\n";
    out += "claw-free:          " + std::string(detail::flag_text(r.claw_free)) + "\n";
    out += "well-covered:       " + std::string(detail::flag_text(r.well_covered)) + "\n";
    out += "very well-covered:  " + std::string(detail::flag_text(r.very_well_covered)) + "\n";
    return out;
}

}  // namespace indpoly
