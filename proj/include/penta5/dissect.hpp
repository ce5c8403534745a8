#pragma once

#include <cstdint>
#include <vector>

#include "penta5/report.hpp"
#include "penta5/series.hpp"

namespace penta5 {

/// Keeps exactly the coefficients at exponents congruent to r mod m
/// (negative exponents included), zeroing the rest. Truncation is
/// preserved. r = 0, m = 5 is the classical huffing operator.
LaurentSeries huff(const LaurentSeries& a, std::int64_t m, std::int64_t r);

/// The q^{m n + r} component with q^m replaced by q and q^r divided
/// out: coefficient of q^n in the result is a's coefficient of
/// q^{m n + r}. Truncation becomes ceil((a.trunc - r)/m).
LaurentSeries collapse(const LaurentSeries& a, std::int64_t m, std::int64_t r);

/// Inverse of collapse: maps the coefficient at n back to exponent
/// m n + r. Exact below m*collapsed.trunc() + r, since every exponent
/// not congruent to r mod m is exactly zero in the component.
LaurentSeries expand_component(const LaurentSeries& collapsed, std::int64_t m, std::int64_t r);

/// Extracts the matrix entries m(i, 1..jmax) from series arithmetic
/// alone: huff the (-i)-th power of E1/(q E25) to multiples of five,
/// then peel greedily against powers of E5^6/(q^5 E25^6) — the
/// coefficient of q^{5j} in the residual is m(i,j) because those
/// powers lead with coefficient 1 at q^{5j}.
///
/// When jmax >= i the residual must come out identically zero within
/// truncation (the decomposition into finitely many reciprocal powers
/// is machine-checked); a nonzero residual throws Error. Throws
/// InsufficientTruncationError when `bound` cannot support the peel;
/// bound >= 5*jmax + 5*i is always enough.
std::vector<Int> m_oracle(std::int64_t i, std::int64_t jmax, std::int64_t bound);

/// The two huffing-lemma shapes relating eta quotients across the
/// dissection. H1 acts on q^{i-5} E5^{6i-1}/E1^{6i}; H2 acts on
/// q^{i-4} E5^{6i}/E1^{6i+1}.
enum class HVariant { H1, H2 };

/// Expands both sides of the chosen huffing lemma for the given i and
/// compares exactly: the left side by huffing the eta quotient, the
/// right side as a finite sum of matrix entries times eta quotients.
IdentityReport verify_h_lemma(std::int64_t i, HVariant variant, std::int64_t bound);

}  // namespace penta5
