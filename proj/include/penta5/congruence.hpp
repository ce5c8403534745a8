#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "penta5/matrices.hpp"
#include "penta5/report.hpp"
#include "penta5/series.hpp"

namespace penta5 {

/// Exact k-colored partition counts p_{-k}(0..n_max).
struct PartitionTable {
    std::int64_t colors = 1;
    std::vector<Int> coeffs;

    const Int& at(std::int64_t n) const { return coeffs.at(static_cast<std::size_t>(n)); }
    std::int64_t max_n() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }

    LaurentSeries as_series() const;
};

/// p_{-k}(0..n_max) by k successive divisions by the sparse pentagonal
/// expansion of E1 (O(k n sqrt n) bignum additions).
PartitionTable pk_table(std::int64_t colors, std::int64_t n_max);

/// Tables for several color counts at once, sharing the division chain
/// (cost is one pass up to max(colors), not one per table). `colors`
/// may contain duplicates and arrive unsorted.
std::vector<PartitionTable> pk_tables(std::vector<std::int64_t> colors, std::int64_t n_max);

/// Series of coefficients along the progression step*n + offset, built
/// by repeated 5-dissection collapse (step must be a power of 5).
LaurentSeries progression_series(const PartitionTable& table, std::int64_t step,
                                 std::int64_t offset, std::int64_t terms);

struct CongruenceReport {
    std::int64_t colors = 1;
    std::int64_t step = 1;    // the A of p_{-k}(A n + B)
    std::int64_t offset = 0;  // the B
    std::int64_t alpha = 1;   // modulus is 5^alpha
    std::int64_t n_max = 0;
    bool pass = false;
    Valuation min_valuation;
    std::optional<std::pair<std::int64_t, Int>> counterexample;  // first failing (n, value)

    Int modulus() const;
    std::string id() const;  // e.g. "p_{-2}(25n+23) % 25"

    bool operator==(const CongruenceReport&) const = default;
};

/// Checks pi5(p_{-k}(A n + B)) >= alpha for 0 <= n <= n_max; the table
/// must extend to A*n_max + B. Reports the minimum observed valuation,
/// so congruences stronger than requested are visible.
CongruenceReport verify_progression(const PartitionTable& table, std::int64_t step,
                                    std::int64_t offset, std::int64_t alpha,
                                    std::int64_t n_max);
CongruenceReport verify_progression(std::int64_t colors, std::int64_t step, std::int64_t offset,
                                    std::int64_t alpha, std::int64_t n_max);

/// The reciprocal of 24 modulo 5^alpha, in [0, 5^alpha).
Int delta_alpha(std::int64_t alpha);

/// The congruence-family drivers. Identifiers follow the CLI contract.
enum class TheoremId {
    two_color_powers,    // "1.1": p_{-2} modulo powers of 5
    six_color_powers,    // "1.2": p_{-6}
    seven_color_powers,  // "1.3": p_{-7}
    mod25_family,        // "mod25": p_{-(25r+k)}(25n+25-k) % 25
    corollary,           // ten sibling families for k = 16, 21, 22
    watson,              // p(5^a n + delta_a) % 5^a
};

std::optional<TheoremId> theorem_from_name(const std::string& name);
const char* theorem_name(TheoremId id);

struct TheoremRun {
    std::vector<CongruenceReport> reports;
    bool all_pass = true;
};

/// Runs every instance of a congruence family: alpha = 1..alpha_max
/// (power families), r = 0..r_max (mod-25 families). Each instance's
/// n_max is the largest n with A*n + B <= coefficient_budget, further
/// capped by `count` when nonnegative. Throws
/// NonIntegralProgressionError if a progression formula fails its
/// divisibility requirement (a driver bug, never the theorems).
TheoremRun run_theorem(TheoremId id, std::int64_t alpha_max, std::int64_t r_max,
                       std::int64_t coefficient_budget, std::int64_t count = -1);

/// The generating-function recursion families of the power theorems.
enum class GfTheorem {
    two_color,    // "gf4.1": rows 2j-1 and 2j of a
    six_color,    // "gf4.4": row j of b
    seven_color,  // "gf4.6": rows 2j-1 and 2j of c
};

std::optional<GfTheorem> gf_from_name(const std::string& name);
const char* gf_name(GfTheorem id);

struct GfCheck {
    std::string id;  // e.g. "gf4.4 row 2: p_{-6}(25n+19)"
    IdentityReport report;

    bool operator==(const GfCheck&) const = default;
};

/// Verifies the recursion's generating-function identity for every row
/// produced by j = 1..j_max, to `terms` coefficients: left side by
/// repeated collapse of the colored-partition series, right side from
/// matrix entries and eta quotients.
std::vector<GfCheck> verify_gf_theorem(GfTheorem id, std::int64_t j_max, std::int64_t terms);

struct SearchHit {
    std::int64_t colors = 0;
    std::int64_t residue = 0;
    Valuation min_valuation;

    bool operator==(const SearchHit&) const = default;
};

/// Empirical scan: all residues B mod `step` such that
/// pi5(p_{-k}(step*n + B)) >= alpha for every n <= n_max, for each k in
/// [colors_lo, colors_hi]. Evidence, not proof.
std::vector<SearchHit> search_progressions(std::int64_t colors_lo, std::int64_t colors_hi,
                                           std::int64_t alpha, std::int64_t step,
                                           std::int64_t n_max);

}  // namespace penta5
