#include "penta5/dissect.hpp"

#include <algorithm>
#include <stdexcept>

#include "penta5/etaq.hpp"
#include "penta5/matrices.hpp"

namespace penta5 {

namespace {

void require_residue(std::int64_t m, std::int64_t r) {
    if (m < 1) throw std::invalid_argument("dissection modulus must be >= 1");
    if (r < 0 || r >= m) throw std::invalid_argument("residue must satisfy 0 <= r < m");
}

}  // namespace

LaurentSeries huff(const LaurentSeries& a, std::int64_t m, std::int64_t r) {
    require_residue(m, r);
    std::vector<Int> v(a.coeffs());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::int64_t e = a.offset() + static_cast<std::int64_t>(i);
        if (mod_floor(e, m) != r) v[i] = 0;
    }
    return LaurentSeries::from_coeffs(a.offset(), std::move(v), a.trunc());
}

LaurentSeries collapse(const LaurentSeries& a, std::int64_t m, std::int64_t r) {
    require_residue(m, r);
    std::int64_t out_trunc = ceil_div(a.trunc() - r, m);
    std::int64_t n0 = ceil_div(a.offset() - r, m);  // first eligible target index
    if (n0 >= out_trunc) return LaurentSeries::zero(out_trunc);
    std::vector<Int> v(static_cast<std::size_t>(out_trunc - n0));
    for (std::int64_t n = n0; n < out_trunc; ++n) {
        std::int64_t e = m * n + r;
        if (e >= a.offset() && e < a.trunc()) {
            v[static_cast<std::size_t>(n - n0)] = a.coeffs()[static_cast<std::size_t>(e - a.offset())];
        }
    }
    return LaurentSeries::from_coeffs(n0, std::move(v), out_trunc);
}

LaurentSeries expand_component(const LaurentSeries& collapsed, std::int64_t m, std::int64_t r) {
    require_residue(m, r);
    std::int64_t out_trunc = m * collapsed.trunc() + r;
    if (collapsed.is_zero()) return LaurentSeries::zero(out_trunc);
    std::int64_t out_offset = m * collapsed.offset() + r;
    std::vector<Int> v(static_cast<std::size_t>(out_trunc - out_offset));
    for (std::size_t i = 0; i < collapsed.coeffs().size(); ++i) {
        v[static_cast<std::size_t>(m * static_cast<std::int64_t>(i))] = collapsed.coeffs()[i];
    }
    return LaurentSeries::from_coeffs(out_offset, std::move(v), out_trunc);
}

namespace {

// zeta = E1 / (q E25) as a series exact below bound - 1
LaurentSeries zeta_series(std::int64_t bound) {
    LaurentSeries z = mul(expand_eta(1, bound), inverse(expand_eta(25, bound)));
    return z.shifted(-1);
}

// T^{power} where T = E5^6 / (q^5 E25^6), exact below `bound` for power < 0
LaurentSeries t_power(std::int64_t power, std::int64_t bound) {
    std::int64_t guard = bound + 5 * (power < 0 ? -power : power) + 5;
    LaurentSeries t = mul(int_pow(expand_eta(5, guard), 6),
                          inverse(int_pow(expand_eta(25, guard), 6)))
                          .shifted(-5);
    LaurentSeries p = int_pow(t, power);
    return p.trunc() > bound ? p.truncated(bound) : p;
}

}  // namespace

std::vector<Int> m_oracle(std::int64_t i, std::int64_t jmax, std::int64_t bound) {
    if (i < 1 || jmax < 1) throw std::invalid_argument("m_oracle indices start at 1");
    // zeta^{-i} has offset i and bound (bound - 1) + i + 1 = bound + i
    LaurentSeries h = huff(int_pow(zeta_series(bound), -i), 5, 0);
    if (h.trunc() <= 5 * jmax) {
        throw InsufficientTruncationError(
            "bound " + std::to_string(bound) + " cannot determine " + std::to_string(jmax) +
            " peeled entries (need exactness past q^" + std::to_string(5 * jmax) + ")");
    }
    std::vector<Int> entries;
    entries.reserve(static_cast<std::size_t>(jmax));
    LaurentSeries residual = h;
    for (std::int64_t j = 1; j <= jmax; ++j) {
        Int c = residual.coeff_at(5 * j);
        if (c != 0) {
            residual = sub(residual, scale(c, t_power(-j, residual.trunc())));
        }
        entries.push_back(std::move(c));
    }
    if (jmax >= i && !residual.is_zero()) {
        throw Error("peel residual nonzero at q^" + std::to_string(residual.offset()) +
                    " for i=" + std::to_string(i) +
                    ": the finite reciprocal-power decomposition failed");
    }
    return entries;
}

IdentityReport verify_h_lemma(std::int64_t i, HVariant variant, std::int64_t bound) {
    if (i < 1) throw std::invalid_argument("lemma index starts at 1");
    bool h1 = variant == HVariant::H1;
    // left side: huff(q^{i-5} E5^{6i-1}/E1^{6i}) resp. huff(q^{i-4} E5^{6i}/E1^{6i+1})
    std::int64_t shift = h1 ? i - 5 : i - 4;
    std::int64_t e5 = h1 ? 6 * i - 1 : 6 * i;
    std::int64_t e1 = h1 ? 6 * i : 6 * i + 1;
    std::int64_t guard = std::max<std::int64_t>(bound - shift, 1);
    LaurentSeries quot = mul(int_pow(expand_eta(5, guard), e5),
                             int_pow(expand_eta(1, guard), -e1))
                             .shifted(shift);
    if (quot.trunc() > bound) quot = quot.truncated(bound);
    LaurentSeries lhs = huff(quot, 5, 0);
    // right side: sum_j m(6i(+1), i+j) q^{5j-5} E25^{6j(-1)} / E5^{6j(+1)},
    // finite because the matrix row vanishes past column 6i(+1)
    std::int64_t row = h1 ? 6 * i : 6 * i + 1;
    LaurentSeries rhs = LaurentSeries::zero(bound);
    for (std::int64_t j = 1; i + j <= row && 5 * j - 5 < bound; ++j) {
        Int entry = m_entry(row, i + j);
        if (entry == 0) continue;
        std::int64_t term_bound = bound - (5 * j - 5);
        std::int64_t e25 = h1 ? 6 * j : 6 * j - 1;
        std::int64_t e5d = h1 ? 6 * j + 1 : 6 * j;
        LaurentSeries term = mul(int_pow(expand_eta(25, term_bound), e25),
                                 int_pow(expand_eta(5, term_bound), -e5d));
        rhs = add(rhs, scale(entry, term.shifted(5 * j - 5)));
    }
    return compare_series(lhs, rhs);
}

}  // namespace penta5
