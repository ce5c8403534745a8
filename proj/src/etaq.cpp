#include "penta5/etaq.hpp"

#include <stdexcept>
#include <vector>

namespace penta5 {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

LaurentSeries expand_eta(std::int64_t j, std::int64_t bound) {
    require(j >= 1, "eta base must be >= 1");
    require(bound >= 1, "truncation bound must be >= 1");
    std::vector<Int> v(static_cast<std::size_t>(bound));
    v[0] = 1;
    // exponents j*k(3k-1)/2 and j*k(3k+1)/2, sign (-1)^k
    for (std::int64_t k = 1;; ++k) {
        std::int64_t g1 = j * (k * (3 * k - 1) / 2);
        if (g1 >= bound) break;
        int sign = (k & 1) ? -1 : 1;
        v[static_cast<std::size_t>(g1)] = sign;
        std::int64_t g2 = j * (k * (3 * k + 1) / 2);
        if (g2 < bound) v[static_cast<std::size_t>(g2)] = sign;
    }
    return LaurentSeries::from_coeffs(0, std::move(v));
}

LaurentSeries expand_gen_eta(std::int64_t a, std::int64_t m, std::int64_t bound) {
    require(m >= 1 && a >= 1 && a <= m, "generalized eta needs 1 <= a <= m");
    require(bound >= 1, "truncation bound must be >= 1");
    std::vector<Int> v(static_cast<std::size_t>(bound));
    v[0] = 1;
    for (std::int64_t e = a; e < bound; e += m) {
        // multiply in place by (1 - q^e)
        for (std::int64_t i = bound - 1; i >= e; --i) {
            if (v[static_cast<std::size_t>(i - e)] != 0) {
                v[static_cast<std::size_t>(i)] -= v[static_cast<std::size_t>(i - e)];
            }
        }
    }
    return LaurentSeries::from_coeffs(0, std::move(v));
}

LaurentSeries expand_rr_quotient(std::int64_t k, std::int64_t bound) {
    require(k >= 1, "R argument power must be >= 1");
    require(bound >= 1, "truncation bound must be >= 1");
    LaurentSeries num =
        mul(expand_gen_eta(k, 5 * k, bound), expand_gen_eta(4 * k, 5 * k, bound));
    LaurentSeries den =
        mul(expand_gen_eta(2 * k, 5 * k, bound), expand_gen_eta(3 * k, 5 * k, bound));
    return mul(num, inverse(den));
}

bool binomial_congruence_check(std::int64_t p, std::int64_t alpha, std::int64_t bound) {
    require(p >= 2, "p must be a prime >= 2");
    require(alpha >= 1, "alpha must be >= 1");
    Int mod_p = p;
    LaurentSeries lhs1 = int_pow(expand_eta(alpha, bound), p).reduced_mod(mod_p);
    LaurentSeries rhs1 = expand_eta(p * alpha, bound).reduced_mod(mod_p);
    if (lhs1 != rhs1) return false;

    Int p_alpha;
    mpz_ui_pow_ui(p_alpha.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(alpha));
    Int p_alpha_1;
    mpz_ui_pow_ui(p_alpha_1.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(alpha - 1));
    LaurentSeries lhs2 =
        int_pow(expand_eta(1, bound), p_alpha.get_si()).reduced_mod(p_alpha);
    LaurentSeries rhs2 =
        int_pow(expand_eta(p, bound), p_alpha_1.get_si()).reduced_mod(p_alpha);
    return lhs2 == rhs2;
}

}  // namespace penta5
