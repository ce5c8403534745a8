#pragma once

#include <cstdint>

#include "penta5/series.hpp"

namespace penta5 {

/// E_j^e, an integer power of the eta product (q^j;q^j)_inf.
struct EtaFactor {
    std::int64_t base = 1;  // j >= 1
    std::int64_t exponent = 1;

    bool operator==(const EtaFactor&) const = default;
};

/// (q^a;q^m)_inf ^ e with 1 <= a <= m.
struct GenEtaFactor {
    std::int64_t residue = 1;
    std::int64_t modulus = 1;
    std::int64_t exponent = 1;

    bool operator==(const GenEtaFactor&) const = default;
};

/// (q^j;q^j)_inf, exact below `bound`, via the pentagonal number theorem:
/// O(sqrt(bound/j)) nonzero terms.
LaurentSeries expand_eta(std::int64_t j, std::int64_t bound);

/// prod_{n>=0} (1 - q^{a+m n}), exact below `bound`, by direct
/// multiplication of the binomial factors.
LaurentSeries expand_gen_eta(std::int64_t a, std::int64_t m, std::int64_t bound);

/// The Rogers-Ramanujan quotient
///   R(q) = (q;q^5)(q^4;q^5) / ((q^2;q^5)(q^3;q^5))
/// evaluated at q^k, exact below `bound`. Constant term is 1, so all
/// integer powers are well-defined.
LaurentSeries expand_rr_quotient(std::int64_t k, std::int64_t bound);

/// Checks both binomial-theorem congruences for a prime p:
///   E_alpha^p == E_{p*alpha}   (mod p)
///   E_1^{p^alpha} == E_p^{p^{alpha-1}}  (mod p^alpha)
/// to the given bound.
bool binomial_congruence_check(std::int64_t p, std::int64_t alpha, std::int64_t bound);

}  // namespace penta5
