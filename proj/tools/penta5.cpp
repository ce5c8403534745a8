// penta5 — exact q-series workbench for 5-dissections and k-colored
// partition congruences.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "penta5/congruence.hpp"
#include "penta5/dissect.hpp"
#include "penta5/errors.hpp"
#include "penta5/json_io.hpp"
#include "penta5/matrices.hpp"
#include "penta5/qexpr.hpp"
#include "penta5/version.hpp"

using json = nlohmann::json;
using namespace penta5;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifiedFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct RunConfig {
    std::string format = "text";
    std::int64_t budget = 20000;

    bool json_output() const { return format == "json"; }
};

void emit_json(const RunConfig& cfg, const std::string& command, json params, json results) {
    json doc = {{"command", command},
                {"params", std::move(params)},
                {"results", std::move(results)},
                {"version", kVersion}};
    std::cout << doc.dump(2) << "\n";
    (void)cfg;
}

int fail_syntax(const std::string& text, const SyntaxError& err) {
    std::cerr << "error: " << err.what() << "\n";
    std::cerr << "  " << text << "\n";
    std::cerr << "  " << std::string(std::min(err.offset(), text.size()), ' ') << "^\n";
    return kExitUsage;
}

std::string render_5_factored(const Int& n) {
    if (n == 0) return "0";
    Valuation v = pi5(n);
    Int unit;
    Int p5;
    mpz_ui_pow_ui(p5.get_mpz_t(), 5, static_cast<unsigned long>(v.value));
    unit = n / p5;
    if (v.value == 0) return unit.get_str();
    std::string power = v.value == 1 ? "5" : "5^" + std::to_string(v.value);
    if (unit == 1) return power;
    if (unit == -1) return "-" + power;
    return unit.get_str() + "*" + power;
}

void print_series_text(const LaurentSeries& s, std::int64_t terms) {
    if (s.offset() < 0) {
        for (std::int64_t e = s.offset(); e < s.trunc(); ++e) {
            std::cout << "q^" << e << ": " << s.coeff_at(e).get_str() << "\n";
        }
        return;
    }
    std::int64_t hi = std::min(terms, s.trunc());
    for (std::int64_t e = 0; e < hi; ++e) {
        if (e) std::cout << ", ";
        std::cout << s.coeff_at(e).get_str();
    }
    std::cout << "\n";
}

json series_to_json(const LaurentSeries& s) {
    json coeffs = json::array();
    for (std::int64_t e = s.offset(); e < s.trunc(); ++e) {
        coeffs.push_back(s.coeff_at(e).get_str());
    }
    return {{"status", "ok"},
            {"start", s.is_zero() ? 0 : s.offset()},
            {"achieved_truncation", s.trunc()},
            {"coefficients", std::move(coeffs)}};
}

int cmd_expand(const RunConfig& cfg, const std::string& expr_text, std::int64_t terms,
               std::optional<std::int64_t> mod) {
    QExpression expr;
    try {
        expr = parse(expr_text);
    } catch (const SyntaxError& err) {
        return fail_syntax(expr_text, err);
    }
    LaurentSeries s = evaluate(expr, terms);
    if (mod) s = s.reduced_mod(Int(*mod));
    if (cfg.json_output()) {
        json result = series_to_json(s);
        result["id"] = expr_text;
        json params = {{"terms", terms}};
        if (mod) params["mod"] = *mod;
        emit_json(cfg, "expand", std::move(params), json::array({std::move(result)}));
    } else {
        print_series_text(s, terms);
    }
    return kExitOk;
}

int cmd_verify_identity(const RunConfig& cfg, const std::string& statement, std::int64_t terms,
                        std::optional<std::int64_t> mod) {
    std::size_t sep = statement.find("==");
    if (sep == std::string::npos) {
        std::cerr << "error: identity must have the form \"lhs == rhs\"\n";
        return kExitUsage;
    }
    std::string lhs_text = statement.substr(0, sep);
    std::string rhs_text = statement.substr(sep + 2);
    QExpression lhs, rhs;
    try {
        lhs = parse(lhs_text);
    } catch (const SyntaxError& err) {
        return fail_syntax(lhs_text, err);
    }
    try {
        rhs = parse(rhs_text);
    } catch (const SyntaxError& err) {
        return fail_syntax(rhs_text, err);
    }
    std::optional<Int> modulus;
    if (mod) modulus = Int(*mod);
    IdentityReport report = verify_identity(lhs, rhs, terms, modulus);
    if (cfg.json_output()) {
        json result = report;
        result["id"] = statement;
        json params = {{"terms", terms}};
        if (mod) params["mod"] = *mod;
        emit_json(cfg, "verify-identity", std::move(params), json::array({std::move(result)}));
    } else if (report.equal) {
        std::cout << "equal below q^" << report.checked_bound;
        if (mod) std::cout << " (mod " << *mod << ")";
        std::cout << "\n";
    } else {
        std::cout << "UNEQUAL at q^" << report.mismatch->exponent << ": lhs has "
                  << report.mismatch->lhs.get_str() << ", rhs has "
                  << report.mismatch->rhs.get_str() << "\n";
    }
    return report.equal ? kExitOk : kExitVerifiedFalse;
}

void print_congruence_text(const CongruenceReport& r) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id() << "  n<=" << r.n_max
              << "  min_val=" << r.min_valuation.to_string();
    if (r.counterexample) {
        std::cout << "  counterexample n=" << r.counterexample->first << " value "
                  << r.counterexample->second.get_str();
    }
    std::cout << "\n";
}

int cmd_verify_congruence(const RunConfig& cfg, std::int64_t colors, std::int64_t step,
                          std::int64_t offset, std::int64_t alpha,
                          std::optional<std::int64_t> count) {
    std::int64_t n_max = (cfg.budget - offset) / step;
    if (count) n_max = std::min(n_max, *count);
    if (n_max < 0) n_max = 0;
    CongruenceReport report = verify_progression(colors, step, offset, alpha, n_max);
    if (cfg.json_output()) {
        json params = {{"colors", colors}, {"step", step},   {"offset", offset},
                       {"alpha", alpha},   {"count", n_max + 1}};
        emit_json(cfg, "verify-congruence", std::move(params), json::array({json(report)}));
    } else {
        print_congruence_text(report);
    }
    return report.pass ? kExitOk : kExitVerifiedFalse;
}

int cmd_theorem(const RunConfig& cfg, const std::string& id, std::int64_t alpha_max,
                std::int64_t r_max, std::int64_t count, std::int64_t j_max,
                std::int64_t terms) {
    std::vector<TheoremId> congruence_ids;
    std::vector<GfTheorem> gf_ids;
    if (id == "all") {
        congruence_ids = {TheoremId::two_color_powers, TheoremId::six_color_powers,
                          TheoremId::seven_color_powers, TheoremId::mod25_family,
                          TheoremId::corollary, TheoremId::watson};
        gf_ids = {GfTheorem::two_color, GfTheorem::six_color, GfTheorem::seven_color};
    } else if (auto tid = theorem_from_name(id)) {
        congruence_ids = {*tid};
    } else if (auto gid = gf_from_name(id)) {
        gf_ids = {*gid};
    } else {
        std::cerr << "error: unknown theorem id '" << id
                  << "' (expected 1.1, 1.2, 1.3, mod25, corollary, watson, gf4.1, gf4.4, "
                     "gf4.6, or all)\n";
        return kExitUsage;
    }

    bool all_pass = true;
    json results = json::array();
    for (TheoremId tid : congruence_ids) {
        TheoremRun run = run_theorem(tid, alpha_max, r_max, cfg.budget, count);
        all_pass = all_pass && run.all_pass;
        for (const CongruenceReport& r : run.reports) {
            if (cfg.json_output()) {
                json entry = r;
                entry["theorem"] = theorem_name(tid);
                results.push_back(std::move(entry));
            } else {
                print_congruence_text(r);
            }
        }
    }
    for (GfTheorem gid : gf_ids) {
        for (const GfCheck& check : verify_gf_theorem(gid, j_max, terms)) {
            all_pass = all_pass && check.report.equal;
            if (cfg.json_output()) {
                results.push_back(json(check));
            } else {
                std::cout << (check.report.equal ? "PASS " : "FAIL ") << check.id
                          << "  terms=" << check.report.checked_bound << "\n";
            }
        }
    }
    if (cfg.json_output()) {
        json params = {{"id", id},       {"alpha_max", alpha_max}, {"r_max", r_max},
                       {"count", count}, {"jmax", j_max},          {"terms", terms},
                       {"budget", cfg.budget}};
        emit_json(cfg, "theorem", std::move(params), std::move(results));
    } else {
        std::cout << (all_pass ? "all instances pass" : "FAILURES present") << "\n";
    }
    return all_pass ? kExitOk : kExitVerifiedFalse;
}

int cmd_matrix(const RunConfig& cfg, const std::string& family_arg, std::int64_t rows,
               std::int64_t cols, bool valuations) {
    MatrixFamily family;
    if (family_arg == "m") family = MatrixFamily::m;
    else if (family_arg == "a") family = MatrixFamily::a;
    else if (family_arg == "b") family = MatrixFamily::b;
    else if (family_arg == "c") family = MatrixFamily::c;
    else {
        std::cerr << "error: unknown family '" << family_arg << "' (expected m, a, b, or c)\n";
        return kExitUsage;
    }
    MatrixTable table(family);
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(rows));
    json json_rows = json::array();
    for (std::int64_t r = 1; r <= rows; ++r) {
        json json_row = json::array();
        for (std::int64_t c = 1; c <= cols; ++c) {
            const Int& value = table.entry(r, c);
            std::string text =
                valuations ? pi5(value).to_string() : render_5_factored(value);
            cells[static_cast<std::size_t>(r - 1)].push_back(text);
            json_row.push_back(valuations ? json(pi5(value)) : json(value.get_str()));
        }
        json_rows.push_back(std::move(json_row));
    }
    if (cfg.json_output()) {
        json params = {{"family", family_arg},
                       {"rows", rows},
                       {"cols", cols},
                       {"valuations", valuations}};
        json result = {{"id", family_arg}, {"status", "ok"}, {"entries", std::move(json_rows)}};
        emit_json(cfg, "matrix", std::move(params), json::array({std::move(result)}));
    } else {
        std::vector<std::size_t> widths(static_cast<std::size_t>(cols));
        for (const auto& row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                widths[c] = std::max(widths[c], row[c].size());
            }
        }
        for (const auto& row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) std::cout << "  ";
                std::cout << std::string(widths[c] - row[c].size(), ' ') << row[c];
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_huff(const RunConfig& cfg, const std::string& expr_text, std::int64_t modulus,
             std::int64_t residue, std::int64_t terms, bool collapse_out) {
    QExpression expr;
    try {
        expr = parse(expr_text);
    } catch (const SyntaxError& err) {
        return fail_syntax(expr_text, err);
    }
    LaurentSeries s = evaluate(expr, terms);
    s = collapse_out ? collapse(s, modulus, residue) : huff(s, modulus, residue);
    if (cfg.json_output()) {
        json result = series_to_json(s);
        result["id"] = expr_text;
        json params = {{"modulus", modulus},
                       {"residue", residue},
                       {"terms", terms},
                       {"collapse", collapse_out}};
        emit_json(cfg, "huff", std::move(params), json::array({std::move(result)}));
    } else {
        print_series_text(s, s.trunc());
    }
    return kExitOk;
}

int cmd_search(const RunConfig& cfg, std::int64_t colors_from, std::int64_t colors_to,
               std::int64_t alpha, std::int64_t step, std::optional<std::int64_t> count) {
    std::int64_t n_max = count ? *count : (cfg.budget - step + 1) / step;
    std::vector<SearchHit> hits = search_progressions(colors_from, colors_to, alpha, step, n_max);
    if (cfg.json_output()) {
        json params = {{"colors_from", colors_from},
                       {"colors_to", colors_to},
                       {"alpha", alpha},
                       {"step", step},
                       {"count", n_max + 1}};
        emit_json(cfg, "search", std::move(params), json(hits));
    } else {
        for (const SearchHit& hit : hits) {
            std::cout << "k=" << hit.colors << "  B=" << hit.residue
                      << "  min_val=" << hit.min_valuation.to_string() << "  (empirical, n<="
                      << n_max << ")\n";
        }
        if (hits.empty()) std::cout << "no progressions found\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series workbench: 5-dissections, eta quotients, and k-colored "
                 "partition congruences"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    RunConfig cfg;
    if (const char* env = std::getenv("PENTA5_BUDGET")) {
        cfg.budget = std::strtoll(env, nullptr, 10);
        if (cfg.budget < 1) {
            std::cerr << "error: PENTA5_BUDGET must be a positive integer\n";
            return kExitUsage;
        }
    }
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--budget", cfg.budget, "largest coefficient index any driver may touch")
        ->check(CLI::PositiveNumber);

    std::string expr_text, statement, theorem_id, family;
    std::int64_t terms = 32, mod_value = 0, colors = 1, step = 5, offset = 0, alpha = 1;
    std::int64_t alpha_max = 2, r_max = 1, count = -1, j_max = 2, gf_terms = 60;
    std::int64_t residue = 0, colors_from = 1, colors_to = 1;
    bool valuations = false, do_collapse = false;
    std::int64_t rows = 5, cols = 5;

    CLI::App* expand = app.add_subcommand("expand", "expand an expression into coefficients");
    expand->add_option("expr", expr_text, "expression to expand")->required();
    expand->add_option("--terms", terms, "number of coefficients")->check(CLI::PositiveNumber);
    CLI::Option* expand_mod =
        expand->add_option("--mod", mod_value, "reduce coefficients modulo M")
            ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 62));

    CLI::App* verify = app.add_subcommand("verify-identity", "check \"lhs == rhs\" by expansion");
    verify->add_option("identity", statement, "identity of the form \"lhs == rhs\"")->required();
    verify->add_option("--terms", terms, "comparison bound")->check(CLI::PositiveNumber);
    CLI::Option* verify_mod = verify->add_option("--mod", mod_value, "compare modulo M")
                                  ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 62));

    CLI::App* congr = app.add_subcommand("verify-congruence",
                                         "check pi5(p_{-k}(A n + B)) >= alpha over a range");
    congr->add_option("--colors,-k", colors, "number of colors k")
        ->required()
        ->check(CLI::PositiveNumber);
    congr->add_option("--step,-A", step, "progression step A")->check(CLI::PositiveNumber);
    congr->add_option("--offset,-B", offset, "progression offset B")
        ->check(CLI::NonNegativeNumber);
    congr->add_option("--alpha", alpha, "required 5-adic valuation")->check(CLI::PositiveNumber);
    CLI::Option* congr_count =
        congr->add_option("--count", count, "check n = 0..count")->check(CLI::NonNegativeNumber);

    CLI::App* theorem = app.add_subcommand("theorem", "run a congruence-family driver");
    theorem->add_option("id", theorem_id,
                        "1.1, 1.2, 1.3, mod25, corollary, watson, gf4.1, gf4.4, gf4.6, or all")
        ->required();
    theorem->add_option("--alpha-max", alpha_max, "largest alpha instance")
        ->check(CLI::PositiveNumber);
    theorem->add_option("--r-max", r_max, "largest r instance")->check(CLI::NonNegativeNumber);
    theorem->add_option("--count", count, "cap on checked n per instance")
        ->check(CLI::NonNegativeNumber);
    theorem->add_option("--jmax", j_max, "rows for generating-function recursions")
        ->check(CLI::PositiveNumber);
    theorem->add_option("--terms", gf_terms, "bound for generating-function recursions")
        ->check(CLI::PositiveNumber);

    CLI::App* matrix = app.add_subcommand("matrix", "dump a matrix family window");
    matrix->add_option("family", family, "m, a, b, or c")->required();
    matrix->add_option("--rows", rows, "rows to print")->check(CLI::PositiveNumber);
    matrix->add_option("--cols", cols, "columns to print")->check(CLI::PositiveNumber);
    matrix->add_flag("--valuations", valuations, "print 5-adic valuations instead of entries");

    CLI::App* huff_cmd = app.add_subcommand("huff", "project a series onto one residue class");
    huff_cmd->add_option("expr", expr_text, "expression to expand and project")->required();
    huff_cmd->add_option("--modulus", step, "dissection modulus")->check(CLI::PositiveNumber);
    huff_cmd->add_option("--residue", residue, "kept residue class")
        ->check(CLI::NonNegativeNumber);
    huff_cmd->add_option("--terms", terms, "expansion bound")->check(CLI::PositiveNumber);
    huff_cmd->add_flag("--collapse", do_collapse, "substitute q^m -> q after projecting");

    CLI::App* search = app.add_subcommand("search", "scan for progressions empirically");
    search->add_option("--colors-from", colors_from, "first color count")
        ->required()
        ->check(CLI::PositiveNumber);
    search->add_option("--colors-to", colors_to, "last color count")
        ->required()
        ->check(CLI::PositiveNumber);
    search->add_option("--alpha", alpha, "required 5-adic valuation")
        ->check(CLI::PositiveNumber);
    search->add_option("--step", step, "progression modulus")->check(CLI::PositiveNumber);
    CLI::Option* search_count =
        search->add_option("--count", count, "check n = 0..count")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (expand->parsed()) {
            return cmd_expand(cfg, expr_text, terms,
                              expand_mod->count() ? std::optional(mod_value) : std::nullopt);
        }
        if (verify->parsed()) {
            return cmd_verify_identity(cfg, statement, terms,
                                       verify_mod->count() ? std::optional(mod_value) : std::nullopt);
        }
        if (congr->parsed()) {
            return cmd_verify_congruence(cfg, colors, step, offset, alpha,
                                         congr_count->count() ? std::optional(count) : std::nullopt);
        }
        if (theorem->parsed()) {
            return cmd_theorem(cfg, theorem_id, alpha_max, r_max, count, j_max, gf_terms);
        }
        if (matrix->parsed()) {
            return cmd_matrix(cfg, family, rows, cols, valuations);
        }
        if (huff_cmd->parsed()) {
            return cmd_huff(cfg, expr_text, step, residue, terms, do_collapse);
        }
        if (search->parsed()) {
            return cmd_search(cfg, colors_from, colors_to, alpha, step,
                              search_count->count() ? std::optional(count) : std::nullopt);
        }
    } catch (const InsufficientTruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NonIntegralProgressionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
