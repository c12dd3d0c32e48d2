#pragma once

/*
 * cli.hpp
 * -------
 * The command-line front end, exposed as a library function so tests can
 * drive it in-process. Five subcommands:
 *
 *   analyze EXPR   full shape report for one expression
 *   poly EXPR      just the coefficient list
 *   oracle EXPR    stable-set counts by brute-force subset enumeration
 *   verify NAME    per-n checks of a named identity
 *   search KIND    conjecture sweep over trees / trees-with-pendants
 *
 * Exit codes: 0 ok, 2 input rejected (parse/range/io), 3 over capacity
 * (including closed-form-only families and the memo cap), 4 a verify or
 * search run found a violation.
 */

#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "indpoly/engine.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/eval.hpp"
#include "indpoly/expr.hpp"
#include "indpoly/families.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/report.hpp"
#include "indpoly/shape.hpp"
#include "indpoly/trees.hpp"

namespace indpoly {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::parse:
        case ErrorCode::range:
        case ErrorCode::io: return 2;
        case ErrorCode::capacity:
        case ErrorCode::closed_form_only:
        case ErrorCode::resource: return 3;
    }
    return 2;
}

// Engine-raw coin flips keep runs reproducible across standard libraries.
inline Graph random_graph(int n, int edge_percent, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < edge_percent) g.add_edge(u, v);
    return g;
}

inline std::mt19937_64 seeded_rng(unsigned long long seed, long long n) {
    return std::mt19937_64(seed + 0x9e3779b97f4a7c15ULL * static_cast<unsigned long long>(n));
}

inline std::string edge_list_string(const Graph& g) {
    std::string out;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) {
                if (!out.empty()) out += " ";
                out += std::to_string(u) + "-" + std::to_string(v);
            }
    return out;
}

// ---- verify ---------------------------------------------------------------

struct VerifyReport {
    std::string identity;
    long long n_max = 0;
    unsigned long long seed = 0;
    int samples = 0;
    std::vector<std::pair<long long, bool>> checks;

    bool all_pass() const {
        for (const auto& [n, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

inline void require_verify_range(const std::string& identity, long long n_max,
                                 long long lo, long long hi) {
    if (n_max < lo)
        throw_error(ErrorCode::range, "verify " + identity + ": n-max must be at least " +
                                          std::to_string(lo));
    if (n_max > hi)
        throw_error(ErrorCode::capacity, "verify " + identity + ": n-max capped at " +
                                             std::to_string(hi));
}

inline VerifyReport run_verify(const std::string& identity, long long n_max,
                               unsigned long long seed, int samples) {
    VerifyReport rep{identity, n_max, seed, samples, {}};
    Polynomial one_plus_x{1, 1};

    if (identity == "star") {
        // Pendant transform against the engine: t-coefficients from the
        // profile of G must equal I(G with a pendant on every vertex).
        require_verify_range(identity, n_max, 1, 32);
        for (long long n = 1; n <= n_max; ++n) {
            auto rng = seeded_rng(seed, n);
            bool ok = true;
            for (int s = 0; s < samples && ok; ++s) {
                Graph g = random_graph(static_cast<int>(n), 40, rng);
                ok = star_transform(stable_set_profile(g)) ==
                     independence_poly(star(g));
            }
            rep.checks.emplace_back(n, ok);
        }
    } else if (identity == "centipede-even") {
        require_verify_range(identity, n_max, 1, 16);
        for (long long n = 1; n <= n_max; ++n) {
            Polynomial lhs = independence_poly(centipede_graph(static_cast<int>(2 * n)));
            Polynomial rhs =
                mul(edgeless_poly(n),
                    independence_poly(triangle_chain_graph(static_cast<int>(n))));
            rep.checks.emplace_back(n, lhs == rhs);
        }
    } else if (identity == "centipede-odd") {
        require_verify_range(identity, n_max, 1, 15);
        for (long long n = 1; n <= n_max; ++n) {
            Polynomial lhs =
                independence_poly(centipede_graph(static_cast<int>(2 * n + 1)));
            Polynomial rhs =
                mul(edgeless_poly(n),
                    independence_poly(triangle_chain_k2_graph(static_cast<int>(n))));
            rep.checks.emplace_back(n, lhs == rhs);
        }
    } else if (identity == "spider-closed-form") {
        require_verify_range(identity, n_max, 2, 31);
        for (long long n = 2; n <= n_max; ++n)
            rep.checks.emplace_back(
                n, spider_poly(n) == independence_poly(spider_graph(static_cast<int>(n))));
    } else if (identity == "spider-mode") {
        require_verify_range(identity, n_max, 2, 2000);
        for (long long n = 2; n <= n_max; ++n) {
            auto argmax = modes(spider_poly(n));
            rep.checks.emplace_back(n, argmax.size() == 1 &&
                                           argmax[0] == spider_mode(n));
        }
    } else if (identity == "lemma1") {
        require_verify_range(identity, n_max, 1, 32);
        for (long long n = 1; n <= n_max; ++n) {
            auto rng = seeded_rng(seed, n);
            bool ok = true;
            for (int s = 0; s < samples && ok; ++s) {
                auto profile =
                    stable_set_profile(random_graph(static_cast<int>(n), 30, rng));
                ok = profile.alpha >= 1 &&
                     BigInt(profile.alpha) * profile.s[static_cast<std::size_t>(profile.alpha)] <=
                         BigInt(profile.n) *
                             profile.s[static_cast<std::size_t>(profile.alpha) - 1];
            }
            rep.checks.emplace_back(n, ok);
        }
    } else if (identity == "zykov-m") {
        // Join-all of m copies: I = m * I(H) - (m - 1), engine on both sides.
        require_verify_range(identity, n_max, 1, 21);
        for (long long n = 1; n <= n_max; ++n) {
            auto rng = seeded_rng(seed, n);
            bool ok = true;
            for (int s = 0; s < samples && ok; ++s) {
                Graph h = random_graph(static_cast<int>(n), 40, rng);
                Polynomial ph = independence_poly(h);
                for (long long m = 2; m <= 3 && ok; ++m) {
                    Graph joined(0);
                    for (long long i = 0; i < m; ++i) joined = zykov_sum(joined, h);
                    ok = independence_poly(joined) == repeated_zykov(ph, m);
                }
            }
            rep.checks.emplace_back(n, ok);
        }
    } else {
        throw_error(ErrorCode::range, "verify: unknown identity '" + identity + "'");
    }
    return rep;
}

inline json verify_to_json(const VerifyReport& r) {
    json j;
    j["command"] = "verify";
    j["identity"] = r.identity;
    j["n_max"] = r.n_max;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    json checks = json::array();
    for (const auto& [n, ok] : r.checks) checks.push_back({{"n", n}, {"pass", ok}});
    j["checks"] = checks;
    j["all_pass"] = r.all_pass();
    return j;
}

inline std::string verify_to_text(const VerifyReport& r) {
    std::string out = "identity: " + r.identity + " (n-max " + std::to_string(r.n_max) +
                      ", seed " + std::to_string(r.seed) + ", samples " +
                      std::to_string(r.samples) + ")\n";
    int passed = 0;
    for (const auto& [n, ok] : r.checks) {
        out += "n=" + std::to_string(n) + ": " + (ok ? "pass" : "FAIL") + "\n";
        if (ok) ++passed;
    }
    out += std::to_string(passed) + "/" + std::to_string(r.checks.size()) + " pass\n";
    return out;
}

// ---- search -----------------------------------------------------------------

struct SearchViolation {
    long long n = 0;
    std::string edges;
    Polynomial poly;
};

struct SearchReport {
    std::string kind;
    std::string mode;
    std::string property;
    long long n_max = 0;
    unsigned long long seed = 0;
    int samples = 0;
    long long tested = 0;
    std::vector<SearchViolation> violations;

    long long strongest_clean_n() const {
        long long strongest = n_max;
        for (const auto& v : violations) strongest = std::min(strongest, v.n - 1);
        return strongest;
    }
};

inline SearchReport run_search(const std::string& kind, const std::string& mode,
                               const std::string& property, long long n_max,
                               unsigned long long seed, int samples) {
    bool with_pendants = (kind == "star-trees");
    bool exhaustive = (mode == "exhaustive");
    SearchReport rep{kind, mode, property, n_max, seed, samples, 0, {}};
    if (exhaustive) {
        if (n_max < 1 || n_max > 9)
            throw_error(ErrorCode::range,
                        "search: exhaustive enumeration supports n-max in [1, 9]");
    } else {
        long long cap = with_pendants ? 32 : 64;
        if (n_max < 1 || n_max > cap)
            throw_error(ErrorCode::range, "search " + kind +
                                              ": sampled n-max must be in [1, " +
                                              std::to_string(cap) + "]");
    }
    for (long long n = 1; n <= n_max; ++n) {
        std::vector<Graph> batch;
        if (exhaustive) {
            batch = all_trees(static_cast<int>(n));
        } else {
            auto rng = seeded_rng(seed, n);
            batch.reserve(static_cast<std::size_t>(samples));
            for (int s = 0; s < samples; ++s)
                batch.push_back(random_tree(static_cast<int>(n), rng));
        }
        for (const Graph& t : batch) {
            Graph subject = with_pendants ? star(t) : t;
            Polynomial p = independence_poly(subject);
            bool ok = (property == "unimodal") ? is_unimodal(p) : is_log_concave(p);
            ++rep.tested;
            if (!ok) rep.violations.push_back({n, edge_list_string(subject), p});
        }
    }
    return rep;
}

inline json search_to_json(const SearchReport& r) {
    json j;
    j["command"] = "search";
    j["kind"] = r.kind;
    j["mode"] = r.mode;
    j["property"] = r.property;
    j["n_max"] = r.n_max;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["tested"] = r.tested;
    json viols = json::array();
    for (const auto& v : r.violations)
        viols.push_back({{"n", v.n},
                         {"edges", v.edges},
                         {"coefficients", coefficient_strings(v.poly)}});
    j["violations"] = viols;
    j["strongest_clean_n"] = r.strongest_clean_n();
    return j;
}

inline std::string search_to_text(const SearchReport& r) {
    std::string out = "search " + r.kind + " (mode " + r.mode + ", property " + r.property +
                      ", n-max " + std::to_string(r.n_max) + ", seed " +
                      std::to_string(r.seed) + ", samples " + std::to_string(r.samples) +
                      ")\n";
    out += "tested: " + std::to_string(r.tested) + "\n";
    out += "violations: " + std::to_string(r.violations.size()) + "\n";
    for (const auto& v : r.violations)
        out += "  n=" + std::to_string(v.n) + ": " + v.edges + "  " + v.poly.to_string() +
               "\n";
    out += "strongest clean n: " + std::to_string(r.strongest_clean_n()) + "\n";
    return out;
}

}  // namespace detail

inline CliResult run_cli(const std::vector<std::string>& args) {
    CliResult result;
    std::ostringstream out, err;

    CLI::App app{"exact independence polynomials of finite graphs"};
    app.require_subcommand(1);

    std::string expr_text, format = "text";
    auto add_common = [&](CLI::App* cmd, bool with_expr) {
        if (with_expr)
            cmd->add_option("expr", expr_text, "graph expression, e.g. \"star(P(7))\"")
                ->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* analyze = app.add_subcommand("analyze", "report a polynomial's shape");
    add_common(analyze, true);
    CLI::App* poly_cmd = app.add_subcommand("poly", "print the coefficient list");
    add_common(poly_cmd, true);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force stable-set counts");
    add_common(oracle, true);
    int max_oracle_vertices = 26;
    oracle->add_option("--max-oracle-vertices", max_oracle_vertices,
                       "refuse graphs larger than this")
        ->capture_default_str();

    CLI::App* verify =
        app.add_subcommand("verify", "check a named identity for n = 1..n-max");
    std::string identity;
    verify->add_option("identity", identity, "which identity to check")
        ->required()
        ->check(CLI::IsMember({"star", "centipede-even", "centipede-odd",
                               "spider-closed-form", "spider-mode", "lemma1", "zykov-m"}));
    long long n_max = 8;
    unsigned long long seed = 12345;
    int samples = 5;
    verify->add_option("--n-max", n_max, "largest n to check")->capture_default_str();
    verify->add_option("--seed", seed, "random seed for sampled graphs")
        ->capture_default_str();
    verify->add_option("--samples", samples, "random graphs per n")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(verify, false);

    CLI::App* search =
        app.add_subcommand("search", "sweep trees for shape-property violations");
    std::string kind, mode = "exhaustive", property = "auto";
    search->add_option("kind", kind, "what to test: each tree T, or T with pendants")
        ->required()
        ->check(CLI::IsMember({"trees", "star-trees"}));
    long long search_n_max = 7;
    unsigned long long search_seed = 12345;
    int search_samples = 50;
    search->add_option("--n-max", search_n_max, "largest vertex count")
        ->capture_default_str();
    search->add_option("--mode", mode, "exhaustive (n-max <= 9) or sample")
        ->check(CLI::IsMember({"exhaustive", "sample"}))
        ->capture_default_str();
    search->add_option("--property", property, "shape property to check")
        ->check(CLI::IsMember({"auto", "unimodal", "log-concave"}))
        ->capture_default_str();
    search->add_option("--seed", search_seed, "random seed for sample mode")
        ->capture_default_str();
    search->add_option("--samples", search_samples, "trees per n in sample mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(search, false);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("indpoly");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? 0 : 2;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    bool as_json = (format == "json");
    try {
        if (analyze->parsed() || poly_cmd->parsed() || oracle->parsed()) {
            GraphExpr expr = parse_graph_expr(expr_text);
            Evaluator ev;
            EvalResult res = ev.eval(expr);
            if (oracle->parsed()) {
                if (!res.graph)
                    throw_error(ErrorCode::capacity,
                                "oracle: expression does not materialize within 64 vertices");
                if (res.graph->vertex_count() > max_oracle_vertices)
                    throw_error(ErrorCode::capacity,
                                "oracle: graph has " +
                                    std::to_string(res.graph->vertex_count()) +
                                    " vertices, limit is " +
                                    std::to_string(max_oracle_vertices));
                StableSetProfile profile = oracle_profile(*res.graph);
                if (as_json) {
                    json j;
                    j["command"] = "oracle";
                    j["expression"] = expr_text;
                    j["vertices"] = profile.n;
                    j["alpha"] = profile.alpha;
                    j["counts"] = detail::coefficient_strings(profile.to_polynomial());
                    out << j.dump(2) << "\n";
                } else {
                    out << "vertices: " << profile.n << "\n"
                        << "alpha: " << profile.alpha << "\n"
                        << "counts: " << profile.to_polynomial().to_string() << "\n";
                }
            } else {
                Polynomial p =
                    res.graph ? independence_poly(*res.graph) : *res.closed_form;
                if (poly_cmd->parsed()) {
                    if (as_json) {
                        json j;
                        j["command"] = "poly";
                        j["expression"] = expr_text;
                        j["degree"] = p.degree();
                        j["coefficients"] = detail::coefficient_strings(p);
                        out << j.dump(2) << "\n";
                    } else {
                        out << p.to_string() << "\n";
                    }
                } else {
                    AnalysisReport rep = make_analysis_report(
                        expr_text, res.graph ? &*res.graph : nullptr, std::move(p));
                    if (as_json)
                        out << analysis_to_json(rep).dump(2) << "\n";
                    else
                        out << analysis_to_text(rep);
                }
            }
        } else if (verify->parsed()) {
            detail::VerifyReport rep = detail::run_verify(identity, n_max, seed, samples);
            if (as_json)
                out << detail::verify_to_json(rep).dump(2) << "\n";
            else
                out << detail::verify_to_text(rep);
            if (!rep.all_pass()) result.exit_code = 4;
        } else if (search->parsed()) {
            if (property == "auto")
                property = (kind == "star-trees") ? "log-concave" : "unimodal";
            detail::SearchReport rep = detail::run_search(kind, mode, property,
                                                          search_n_max, search_seed,
                                                          search_samples);
            if (as_json)
                out << detail::search_to_json(rep).dump(2) << "\n";
            else
                out << detail::search_to_text(rep);
            if (!rep.violations.empty()) result.exit_code = 4;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        result.exit_code = detail::exit_code_for(e.code());
    }

    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace indpoly
