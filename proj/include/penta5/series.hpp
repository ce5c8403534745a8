#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "penta5/errors.hpp"

namespace penta5 {

using Int = mpz_class;

/// Floor division for possibly negative operands (divisor > 0).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

/// Least nonnegative residue of a mod m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    return a - m * floor_div(a, m);
}

/// A formal Laurent series with exact integer coefficients, truncated
/// at an absolute exponent bound.
///
/// The series stores coefficients of q^e for offset() <= e < trunc();
/// those are exact, everything at or above trunc() is unknown.
/// Canonical form: either the coefficient list is empty (the series is
/// zero up to truncation, offset() == trunc()) or the first stored
/// coefficient is nonzero.
///
/// Every operation computes the tightest truncation bound implied by
/// its inputs. Values are immutable after construction.
class LaurentSeries {
public:
    /// Zero series with truncation bound 0.
    LaurentSeries() = default;

    static LaurentSeries zero(std::int64_t trunc) { return LaurentSeries(trunc, {}, trunc); }

    static LaurentSeries one(std::int64_t trunc) { return monomial(1, 0, trunc); }

    /// c * q^e, exact below trunc.
    static LaurentSeries monomial(Int c, std::int64_t exponent, std::int64_t trunc);

    /// Series with coeffs[i] the coefficient of q^(offset+i); exponents
    /// from offset+coeffs.size() up to trunc (>= offset+coeffs.size())
    /// are zero. Canonical form is restored.
    static LaurentSeries from_coeffs(std::int64_t offset, std::vector<Int> coeffs);
    static LaurentSeries from_coeffs(std::int64_t offset, std::vector<Int> coeffs,
                                     std::int64_t trunc);

    std::int64_t offset() const { return offset_; }
    std::int64_t trunc() const { return trunc_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// True if no nonzero coefficient is known (zero up to truncation).
    bool is_zero() const { return coeffs_.empty(); }

    /// Exact coefficient of q^e. Throws BeyondTruncationError for
    /// e >= trunc(): coefficients past the bound are unknown, never 0.
    Int coeff_at(std::int64_t e) const;

    /// Multiply by q^k.
    LaurentSeries shifted(std::int64_t k) const;

    /// Restrict to exponents below t (t <= trunc()).
    LaurentSeries truncated(std::int64_t t) const;

    /// Replace each coefficient by its least nonnegative residue mod M (M >= 2).
    LaurentSeries reduced_mod(const Int& modulus) const;

    friend LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries scale(const Int& c, const LaurentSeries& a);

    /// Multiplicative inverse of a unit-leading (+-1) series.
    /// Result bound: a.trunc() - 2*a.offset().
    friend LaurentSeries inverse(const LaurentSeries& a);

    /// a^e by binary exponentiation; e < 0 goes through inverse();
    /// a^0 is 1 with bound a.trunc() - a.offset().
    friend LaurentSeries int_pow(const LaurentSeries& a, std::int64_t e);

    bool operator==(const LaurentSeries&) const = default;

    /// Rendering like "q^-1 - 1 - q + q^4 (+ O(q^5))", mainly for diagnostics.
    std::string to_string() const;

private:
    LaurentSeries(std::int64_t offset, std::vector<Int> coeffs, std::int64_t trunc)
        : offset_(offset), coeffs_(std::move(coeffs)), trunc_(trunc) {
        canonicalize();
    }

    void canonicalize();

    std::int64_t offset_ = 0;
    std::vector<Int> coeffs_;
    std::int64_t trunc_ = 0;
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries scale(const Int& c, const LaurentSeries& a);
LaurentSeries inverse(const LaurentSeries& a);
LaurentSeries int_pow(const LaurentSeries& a, std::int64_t e);

inline LaurentSeries negate(const LaurentSeries& a) { return scale(-1, a); }
inline LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) {
    return add(a, negate(b));
}

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a) { return negate(a); }

}  // namespace penta5
