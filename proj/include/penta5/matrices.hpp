#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "penta5/series.hpp"

namespace penta5 {

/// 5-adic valuation: the exponent of the largest power of 5 dividing n,
/// with value +infinity for n = 0.
struct Valuation {
    bool infinite = false;
    std::int64_t value = 0;  // meaningful only when finite

    static Valuation inf() { return {true, 0}; }
    static Valuation finite(std::int64_t v) { return {false, v}; }

    bool at_least(std::int64_t bound) const { return infinite || value >= bound; }

    /// min(a, b) with +infinity as the identity.
    static Valuation min(const Valuation& a, const Valuation& b) {
        if (a.infinite) return b;
        if (b.infinite) return a;
        return a.value <= b.value ? a : b;
    }

    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }

    bool operator==(const Valuation&) const = default;
};

Valuation pi5(const Int& n);

enum class MatrixFamily { m, a, b, c };

const char* family_name(MatrixFamily family);

/// The four integer matrix families, defined by a seed row/column and a
/// bilinear recurrence, with entries memoized on demand. All recurrence
/// sums are finite because m(i,j) vanishes for j > i and i > 5j.
class MatrixTable {
public:
    explicit MatrixTable(MatrixFamily family) : family_(family) {}

    MatrixFamily family() const { return family_; }

    /// Entry at (row, col), both >= 1. Indices outside the defined
    /// region contribute 0.
    const Int& entry(std::int64_t row, std::int64_t col);

    /// Exclusive upper bound on the nonzero columns of a row.
    std::int64_t row_width(std::int64_t row) const;

private:
    const Int& m_value(std::int64_t i, std::int64_t j);
    const Int& recurrence_value(std::int64_t row, std::int64_t col);

    MatrixFamily family_;
    std::map<std::pair<std::int64_t, std::int64_t>, Int> memo_;
    // a/b/c rows need m entries; keep one shared m table per instance
    std::map<std::pair<std::int64_t, std::int64_t>, Int> m_memo_;
};

/// Shared-table conveniences (single-threaded use).
Int m_entry(std::int64_t i, std::int64_t j);
Int a_entry(std::int64_t j, std::int64_t k);
Int b_entry(std::int64_t j, std::int64_t k);
Int c_entry(std::int64_t j, std::int64_t k);

/// Lower bound required of pi5(entry(row, col)) by the family's
/// valuation lemma (may be negative, in which case it is vacuous).
std::int64_t valuation_bound(MatrixFamily family, std::int64_t row, std::int64_t col);

struct BoundViolation {
    std::int64_t row = 0;
    std::int64_t col = 0;
    Valuation actual;
    std::int64_t required = 0;

    bool operator==(const BoundViolation&) const = default;
};

struct BoundReport {
    MatrixFamily family = MatrixFamily::m;
    std::int64_t row_max = 0;
    std::int64_t col_max = 0;
    std::int64_t checked = 0;
    std::vector<BoundViolation> violations;

    bool all_hold() const { return violations.empty(); }

    bool operator==(const BoundReport&) const = default;
};

/// Checks every entry with 1 <= row <= row_max, 1 <= col <= col_max
/// against the family's valuation bound (+infinity satisfies anything).
BoundReport verify_valuation_bounds(MatrixFamily family, std::int64_t row_max,
                                    std::int64_t col_max);

}  // namespace penta5
