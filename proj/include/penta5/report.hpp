#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "penta5/series.hpp"

namespace penta5 {

/// First exponent at which two series disagree, with both coefficients
/// (after modular reduction, when a modulus was in effect).
struct Mismatch {
    std::int64_t exponent = 0;
    Int lhs;
    Int rhs;

    bool operator==(const Mismatch&) const = default;
};

/// Outcome of comparing two series up to their common sound bound,
/// optionally modulo M.
struct IdentityReport {
    bool equal = false;
    std::int64_t checked_bound = 0;  // exclusive exponent bound actually compared
    std::optional<Int> modulus;
    std::optional<Mismatch> mismatch;

    bool operator==(const IdentityReport&) const = default;
};

/// Compares a and b on all exponents below min(a.trunc, b.trunc),
/// exactly or mod `modulus` when given.
IdentityReport compare_series(const LaurentSeries& a, const LaurentSeries& b,
                              const std::optional<Int>& modulus = std::nullopt);

}  // namespace penta5
