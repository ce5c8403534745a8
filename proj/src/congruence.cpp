#include "penta5/congruence.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "penta5/dissect.hpp"
#include "penta5/etaq.hpp"
#include "penta5/qexpr.hpp"

namespace penta5 {

namespace {

Int pow5(std::int64_t e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 5, static_cast<unsigned long>(e));
    return r;
}

// signed pentagonal exponents of E1 below `bound`, excluding the constant term
std::vector<std::pair<std::int64_t, int>> pentagonal_terms(std::int64_t bound) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t k = 1;; ++k) {
        std::int64_t g1 = k * (3 * k - 1) / 2;
        if (g1 >= bound) break;
        int sign = (k & 1) ? -1 : 1;
        out.emplace_back(g1, sign);
        std::int64_t g2 = k * (3 * k + 1) / 2;
        if (g2 < bound) out.emplace_back(g2, sign);
    }
    return out;
}

// one in-place division of the coefficient array by E1
void divide_by_e1(std::vector<Int>& c,
                  const std::vector<std::pair<std::int64_t, int>>& pent) {
    std::int64_t n = static_cast<std::int64_t>(c.size());
    for (std::int64_t i = 0; i < n; ++i) {
        Int& ci = c[static_cast<std::size_t>(i)];
        for (const auto& [e, sign] : pent) {
            if (e > i) break;
            const Int& prev = c[static_cast<std::size_t>(i - e)];
            if (sign > 0) {
                mpz_sub(ci.get_mpz_t(), ci.get_mpz_t(), prev.get_mpz_t());
            } else {
                mpz_add(ci.get_mpz_t(), ci.get_mpz_t(), prev.get_mpz_t());
            }
        }
    }
}

}  // namespace

LaurentSeries PartitionTable::as_series() const {
    return LaurentSeries::from_coeffs(0, coeffs);
}

std::vector<PartitionTable> pk_tables(std::vector<std::int64_t> colors, std::int64_t n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    for (std::int64_t k : colors) {
        if (k < 1) throw std::invalid_argument("color count must be >= 1");
    }
    std::vector<std::size_t> order(colors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return colors[x] < colors[y]; });

    std::vector<PartitionTable> out(colors.size());
    std::vector<Int> work(static_cast<std::size_t>(n_max) + 1);
    work[0] = 1;
    auto pent = pentagonal_terms(n_max + 1);
    std::int64_t divided = 0;
    for (std::size_t idx : order) {
        while (divided < colors[idx]) {
            divide_by_e1(work, pent);
            ++divided;
        }
        out[idx] = PartitionTable{colors[idx], work};
    }
    return out;
}

PartitionTable pk_table(std::int64_t colors, std::int64_t n_max) {
    return std::move(pk_tables({colors}, n_max).front());
}

LaurentSeries progression_series(const PartitionTable& table, std::int64_t step,
                                 std::int64_t offset, std::int64_t terms) {
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    if (offset < 0 || offset >= step) throw std::invalid_argument("offset must be in [0, step)");
    std::int64_t needed = step * (terms - 1) + offset;
    if (needed > table.max_n()) {
        throw InsufficientTruncationError(
            "table for " + std::to_string(table.colors) + " colors reaches n=" +
            std::to_string(table.max_n()) + ", progression needs n=" + std::to_string(needed));
    }
    LaurentSeries s = table.as_series();
    std::int64_t a = step;
    std::int64_t b = offset;
    while (a > 1) {
        if (a % 5 != 0) throw std::invalid_argument("progression step must be a power of 5");
        s = collapse(s, 5, b % 5);
        b /= 5;
        a /= 5;
    }
    return s.truncated(terms);
}

Int CongruenceReport::modulus() const { return pow5(alpha); }

std::string CongruenceReport::id() const {
    std::ostringstream out;
    out << "p_{-" << colors << "}(";
    if (step != 1) out << step << "n+";
    out << offset << ") % " << modulus().get_str();
    return out.str();
}

CongruenceReport verify_progression(const PartitionTable& table, std::int64_t step,
                                    std::int64_t offset, std::int64_t alpha,
                                    std::int64_t n_max) {
    if (step < 1 || offset < 0 || offset >= step) {
        throw std::invalid_argument("progression needs step >= 1 and 0 <= offset < step");
    }
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    if (step * n_max + offset > table.max_n()) {
        throw InsufficientTruncationError("partition table too short for progression scan");
    }
    CongruenceReport report;
    report.colors = table.colors;
    report.step = step;
    report.offset = offset;
    report.alpha = alpha;
    report.n_max = n_max;
    report.min_valuation = Valuation::inf();
    report.pass = true;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const Int& value = table.at(step * n + offset);
        Valuation v = pi5(value);
        report.min_valuation = Valuation::min(report.min_valuation, v);
        if (!v.at_least(alpha) && !report.counterexample) {
            report.pass = false;
            report.counterexample = std::make_pair(n, value);
        }
    }
    return report;
}

CongruenceReport verify_progression(std::int64_t colors, std::int64_t step, std::int64_t offset,
                                    std::int64_t alpha, std::int64_t n_max) {
    return verify_progression(pk_table(colors, step * n_max + offset), step, offset, alpha,
                              n_max);
}

Int delta_alpha(std::int64_t alpha) {
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    Int mod = pow5(alpha);
    Int d;
    Int twentyfour = 24;
    if (mpz_invert(d.get_mpz_t(), twentyfour.get_mpz_t(), mod.get_mpz_t()) == 0) {
        throw std::logic_error("24 must be invertible modulo a power of 5");
    }
    return d;
}

namespace {

struct Instance {
    std::int64_t colors;
    std::int64_t step;
    std::int64_t offset;
    std::int64_t alpha;
};

// B = (multiple * 5^power + addend) / divisor, which the theorems
// guarantee to be integral
std::int64_t integral_offset(std::int64_t multiple, std::int64_t power, std::int64_t addend,
                             std::int64_t divisor) {
    Int num = multiple * pow5(power) + addend;
    Int q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                   static_cast<unsigned long>(divisor));
    if (r != 0) {
        throw NonIntegralProgressionError("(" + std::to_string(multiple) + "*5^" +
                                          std::to_string(power) + "+" + std::to_string(addend) +
                                          ")/" + std::to_string(divisor) + " is not integral");
    }
    if (!q.fits_slong_p()) throw std::overflow_error("progression offset out of range");
    return q.get_si();
}

std::int64_t pow5_small(std::int64_t e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= 5;
    return r;
}

std::vector<Instance> theorem_instances(TheoremId id, std::int64_t alpha_max,
                                        std::int64_t r_max) {
    std::vector<Instance> out;
    switch (id) {
        case TheoremId::two_color_powers:
            for (std::int64_t a = 1; a <= alpha_max; ++a) {
                out.push_back({2, pow5_small(2 * a - 1),
                               integral_offset(7, 2 * a - 1, 1, 12), a});
                out.push_back({2, pow5_small(2 * a),
                               integral_offset(11, 2 * a, 1, 12), a + 1});
            }
            break;
        case TheoremId::six_color_powers:
            for (std::int64_t a = 1; a <= alpha_max; ++a) {
                out.push_back({6, pow5_small(a), integral_offset(3, a, 1, 4), a});
                out.push_back({6, pow5_small(a + 1), integral_offset(11, a, 1, 4), a + 1});
                out.push_back({6, pow5_small(a + 1), integral_offset(19, a, 1, 4), a + 1});
            }
            break;
        case TheoremId::seven_color_powers:
            for (std::int64_t a = 1; a <= alpha_max; ++a) {
                out.push_back({7, pow5_small(2 * a - 1),
                               integral_offset(13, 2 * a - 1, 7, 24), a});
                out.push_back({7, pow5_small(2 * a),
                               integral_offset(17, 2 * a, 7, 24), a + 1});
                out.push_back({7, pow5_small(2 * a),
                               integral_offset(61, 2 * a - 1, 7, 24), a + 1});
                out.push_back({7, pow5_small(2 * a),
                               integral_offset(109, 2 * a - 1, 7, 24), a + 1});
            }
            break;
        case TheoremId::mod25_family:
            for (std::int64_t r = 0; r <= r_max; ++r) {
                for (std::int64_t k : {1, 2, 6, 7, 11, 17}) {
                    out.push_back({25 * r + k, 25, 25 - k, 2});
                }
            }
            break;
        case TheoremId::corollary:
            for (std::int64_t r = 0; r <= r_max; ++r) {
                for (std::int64_t b : {19, 24}) out.push_back({25 * r + 16, 25, b, 2});
                for (std::int64_t b : {9, 14, 19, 24}) out.push_back({25 * r + 21, 25, b, 2});
                for (std::int64_t b : {8, 13, 18, 23}) out.push_back({25 * r + 22, 25, b, 2});
            }
            break;
        case TheoremId::watson:
            for (std::int64_t a = 1; a <= alpha_max; ++a) {
                Int d = delta_alpha(a);
                out.push_back({1, pow5_small(a), d.get_si(), a});
            }
            break;
    }
    return out;
}

}  // namespace

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    if (name == "1.1") return TheoremId::two_color_powers;
    if (name == "1.2") return TheoremId::six_color_powers;
    if (name == "1.3") return TheoremId::seven_color_powers;
    if (name == "mod25") return TheoremId::mod25_family;
    if (name == "corollary") return TheoremId::corollary;
    if (name == "watson") return TheoremId::watson;
    return std::nullopt;
}

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::two_color_powers: return "1.1";
        case TheoremId::six_color_powers: return "1.2";
        case TheoremId::seven_color_powers: return "1.3";
        case TheoremId::mod25_family: return "mod25";
        case TheoremId::corollary: return "corollary";
        case TheoremId::watson: return "watson";
    }
    return "?";
}

TheoremRun run_theorem(TheoremId id, std::int64_t alpha_max, std::int64_t r_max,
                       std::int64_t coefficient_budget, std::int64_t count) {
    if (coefficient_budget < 1) throw std::invalid_argument("budget must be >= 1");
    std::vector<Instance> instances = theorem_instances(id, alpha_max, r_max);

    // one table per color count, sized for the largest progression on it
    std::map<std::int64_t, std::int64_t> table_extent;
    std::vector<std::int64_t> n_maxes(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const Instance& inst = instances[i];
        std::int64_t n_max = (coefficient_budget - inst.offset) / inst.step;
        if (count >= 0) n_max = std::min(n_max, count);
        if (n_max < 0) n_max = 0;
        n_maxes[i] = n_max;
        std::int64_t extent = inst.step * n_max + inst.offset;
        auto [it, fresh] = table_extent.emplace(inst.colors, extent);
        if (!fresh) it->second = std::max(it->second, extent);
    }
    std::vector<std::int64_t> colors;
    std::int64_t max_extent = 0;
    for (const auto& [k, extent] : table_extent) {
        colors.push_back(k);
        max_extent = std::max(max_extent, extent);
    }
    std::vector<PartitionTable> tables = pk_tables(colors, max_extent);
    std::map<std::int64_t, const PartitionTable*> by_colors;
    for (const PartitionTable& t : tables) by_colors[t.colors] = &t;

    TheoremRun run;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const Instance& inst = instances[i];
        CongruenceReport report = verify_progression(*by_colors.at(inst.colors), inst.step,
                                                     inst.offset, inst.alpha, n_maxes[i]);
        run.all_pass = run.all_pass && report.pass;
        run.reports.push_back(std::move(report));
    }
    return run;
}

std::optional<GfTheorem> gf_from_name(const std::string& name) {
    if (name == "gf4.1") return GfTheorem::two_color;
    if (name == "gf4.4") return GfTheorem::six_color;
    if (name == "gf4.6") return GfTheorem::seven_color;
    return std::nullopt;
}

const char* gf_name(GfTheorem id) {
    switch (id) {
        case GfTheorem::two_color: return "gf4.1";
        case GfTheorem::six_color: return "gf4.4";
        case GfTheorem::seven_color: return "gf4.6";
    }
    return "?";
}

namespace {

struct GfRow {
    std::int64_t colors;
    MatrixFamily family;
    std::int64_t row;
    std::int64_t power;        // progression step 5^power
    std::int64_t multiple;     // B = (multiple*5^power + addend)/divisor
    std::int64_t addend;
    std::int64_t divisor;
    std::int64_t e5_slope, e5_shift;  // E5 exponent = slope*l + shift
    std::int64_t e1_slope, e1_shift;  // E1 exponent = slope*l + shift
};

std::vector<GfRow> gf_rows(GfTheorem id, std::int64_t j_max) {
    std::vector<GfRow> rows;
    for (std::int64_t j = 1; j <= j_max; ++j) {
        switch (id) {
            case GfTheorem::two_color:
                rows.push_back({2, MatrixFamily::a, 2 * j - 1, 2 * j - 1, 7, 1, 12,
                                6, -2, 6, 0});
                rows.push_back({2, MatrixFamily::a, 2 * j, 2 * j, 11, 1, 12,
                                6, 0, 6, 2});
                break;
            case GfTheorem::six_color:
                rows.push_back({6, MatrixFamily::b, j, j, 3, 1, 4, 6, 0, 6, 6});
                break;
            case GfTheorem::seven_color:
                rows.push_back({7, MatrixFamily::c, 2 * j - 1, 2 * j - 1, 13, 7, 24,
                                6, -1, 6, 6});
                rows.push_back({7, MatrixFamily::c, 2 * j, 2 * j, 17, 7, 24,
                                6, 0, 6, 7});
                break;
        }
    }
    return rows;
}

}  // namespace

std::vector<GfCheck> verify_gf_theorem(GfTheorem id, std::int64_t j_max, std::int64_t terms) {
    if (j_max < 1 || terms < 1) throw std::invalid_argument("j_max and terms must be >= 1");
    std::vector<GfRow> rows = gf_rows(id, j_max);

    std::map<std::int64_t, std::int64_t> extent;
    for (const GfRow& row : rows) {
        std::int64_t step = pow5_small(row.power);
        std::int64_t b = integral_offset(row.multiple, row.power, row.addend, row.divisor);
        std::int64_t need = step * (terms - 1) + b;
        auto [it, fresh] = extent.emplace(row.colors, need);
        if (!fresh) it->second = std::max(it->second, need);
    }
    std::map<std::int64_t, PartitionTable> tables;
    for (const auto& [k, n] : extent) tables.emplace(k, pk_table(k, n));

    std::vector<GfCheck> checks;
    for (const GfRow& row : rows) {
        std::int64_t step = pow5_small(row.power);
        std::int64_t b = integral_offset(row.multiple, row.power, row.addend, row.divisor);
        LaurentSeries lhs = progression_series(tables.at(row.colors), step, b, terms);

        MatrixTable table(row.family);
        QExpression rhs;
        for (std::int64_t l = 1; l - 1 < terms; ++l) {
            const Int& entry = table.entry(row.row, l);
            if (entry == 0 && l > table.row_width(row.row)) break;
            if (entry == 0) continue;
            Term term;
            term.coeff = entry;
            term.qshift = l - 1;
            term.factors.push_back(EtaFactor{5, row.e5_slope * l + row.e5_shift});
            term.factors.push_back(EtaFactor{1, -(row.e1_slope * l + row.e1_shift)});
            rhs.terms.push_back(std::move(term));
        }

        GfCheck check;
        std::ostringstream label;
        label << gf_name(id) << " row " << row.row << ": p_{-" << row.colors << "}(" << step
              << "n+" << b << ")";
        check.id = label.str();
        check.report = compare_series(lhs, evaluate(rhs, terms));
        checks.push_back(std::move(check));
    }
    return checks;
}

std::vector<SearchHit> search_progressions(std::int64_t colors_lo, std::int64_t colors_hi,
                                           std::int64_t alpha, std::int64_t step,
                                           std::int64_t n_max) {
    if (colors_lo < 1 || colors_hi < colors_lo) {
        throw std::invalid_argument("bad color range");
    }
    if (step < 2) throw std::invalid_argument("progression modulus must be >= 2");
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    std::vector<std::int64_t> colors;
    for (std::int64_t k = colors_lo; k <= colors_hi; ++k) colors.push_back(k);
    std::vector<PartitionTable> tables = pk_tables(colors, step * n_max + step - 1);
    std::vector<SearchHit> hits;
    for (const PartitionTable& table : tables) {
        for (std::int64_t b = 0; b < step; ++b) {
            Valuation min_v = Valuation::inf();
            bool ok = true;
            for (std::int64_t n = 0; n <= n_max && ok; ++n) {
                Valuation v = pi5(table.at(step * n + b));
                min_v = Valuation::min(min_v, v);
                ok = v.at_least(alpha);
            }
            if (ok) hits.push_back(SearchHit{table.colors, b, min_v});
        }
    }
    return hits;
}

}  // namespace penta5
