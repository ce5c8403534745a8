#include "penta5/matrices.hpp"

#include <algorithm>
#include <stdexcept>

namespace penta5 {

Valuation pi5(const Int& n) {
    if (n == 0) return Valuation::inf();
    Int reduced;
    Int five = 5;
    mp_bitcnt_t v = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), five.get_mpz_t());
    return Valuation::finite(static_cast<std::int64_t>(v));
}

const char* family_name(MatrixFamily family) {
    switch (family) {
        case MatrixFamily::m: return "m";
        case MatrixFamily::a: return "a";
        case MatrixFamily::b: return "b";
        case MatrixFamily::c: return "c";
    }
    return "?";
}

namespace {

const Int kZero = 0;

Int seed_m_col1(std::int64_t i) {
    switch (i) {
        case 1: return 5;
        case 2: return 10;
        case 3: return 9;
        case 4: return 4;
        case 5: return 1;
        default: return 0;  // m(i,1) = 0 for i >= 6
    }
}

Int seed_row1(MatrixFamily family, std::int64_t k) {
    const Int five = 5;
    auto p5 = [&](unsigned long e) {
        Int r;
        mpz_ui_pow_ui(r.get_mpz_t(), 5, e);
        return r;
    };
    if (family == MatrixFamily::a) {
        if (k == 1) return 10;
        if (k == 2) return 125;
        return 0;
    }
    if (family == MatrixFamily::b) {
        switch (k) {
            case 1: return 315;
            case 2: return 52 * p5(4);
            case 3: return 63 * p5(6);
            case 4: return 6 * p5(9);
            case 5: return p5(11);
            default: return 0;
        }
    }
    // family c
    switch (k) {
        case 1: return 140;
        case 2: return 49 * p5(4);
        case 3: return 21 * p5(7);
        case 4: return 91 * p5(8);
        case 5: return 7 * p5(11);
        case 6: return p5(13);
        default: return 0;
    }
}

// Which m-row a family's recurrence multiplies against when stepping
// from row `prev_row`, and the column shift applied to (i, k).
struct RecurrenceStep {
    std::int64_t m_row_base;   // m(m_row_base*? ...): row = slope*i + intercept
    std::int64_t m_row_slope;  // always 6
    std::int64_t col_shift;    // m col = i + k + col_shift
};

RecurrenceStep step_for(MatrixFamily family, std::int64_t prev_row) {
    bool odd = (prev_row % 2) == 1;
    switch (family) {
        case MatrixFamily::a:
            return {odd ? 0 : 2, 6, 0};
        case MatrixFamily::b:
            return {6, 6, 1};
        case MatrixFamily::c:
            return {odd ? 6 : 7, 6, 1};
        default:
            throw std::logic_error("no recurrence step for family m");
    }
}

}  // namespace

std::int64_t MatrixTable::row_width(std::int64_t row) const {
    if (family_ == MatrixFamily::m) return row;  // m(i,j) = 0 for j > i
    std::int64_t width = family_ == MatrixFamily::a ? 2
                       : family_ == MatrixFamily::b ? 5
                                                    : 6;
    for (std::int64_t r = 1; r < row; ++r) {
        RecurrenceStep step = step_for(family_, r);
        // m(6i + base, i + k + shift) vanishes unless its row is at most
        // five times its column, capping k at 5i + base - shift ... - 1? No:
        // row <= 5*col: 6i + base <= 5(i + k + shift) => k >= (i + base - 5*shift)/5,
        // and col <= row: i + k + shift <= 6i + base => k <= 5i + base - shift.
        width = 5 * width + step.m_row_base - step.col_shift;
    }
    return width;
}

const Int& MatrixTable::m_value(std::int64_t i, std::int64_t j) {
    if (i < 1 || j < 1 || j > i || i > 5 * j) return kZero;
    auto key = std::make_pair(i, j);
    auto it = m_memo_.find(key);
    if (it != m_memo_.end()) return it->second;
    Int value;
    if (j == 1) {
        value = seed_m_col1(i);
    } else {
        value = 25 * m_value(i - 1, j - 1);
        value += 25 * m_value(i - 2, j - 1);
        value += 15 * m_value(i - 3, j - 1);
        value += 5 * m_value(i - 4, j - 1);
        value += m_value(i - 5, j - 1);
    }
    return m_memo_.emplace(key, std::move(value)).first->second;
}

const Int& MatrixTable::recurrence_value(std::int64_t row, std::int64_t col) {
    auto key = std::make_pair(row, col);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Int value;
    if (row == 1) {
        value = seed_row1(family_, col);
    } else if (col > row_width(row)) {
        value = 0;
    } else {
        RecurrenceStep step = step_for(family_, row - 1);
        std::int64_t prev_width = row_width(row - 1);
        Int sum = 0;
        for (std::int64_t i = 1; i <= prev_width; ++i) {
            const Int& prev = recurrence_value(row - 1, i);
            if (prev == 0) continue;
            const Int& mv = m_value(step.m_row_slope * i + step.m_row_base,
                                    i + col + step.col_shift);
            if (mv != 0) sum += prev * mv;
        }
        value = std::move(sum);
    }
    return memo_.emplace(key, std::move(value)).first->second;
}

const Int& MatrixTable::entry(std::int64_t row, std::int64_t col) {
    if (row < 1 || col < 1) throw std::invalid_argument("matrix indices start at 1");
    if (family_ == MatrixFamily::m) return m_value(row, col);
    return recurrence_value(row, col);
}

namespace {

MatrixTable& shared_table(MatrixFamily family) {
    static MatrixTable m{MatrixFamily::m};
    static MatrixTable a{MatrixFamily::a};
    static MatrixTable b{MatrixFamily::b};
    static MatrixTable c{MatrixFamily::c};
    switch (family) {
        case MatrixFamily::m: return m;
        case MatrixFamily::a: return a;
        case MatrixFamily::b: return b;
        default: return c;
    }
}

}  // namespace

Int m_entry(std::int64_t i, std::int64_t j) { return shared_table(MatrixFamily::m).entry(i, j); }
Int a_entry(std::int64_t j, std::int64_t k) { return shared_table(MatrixFamily::a).entry(j, k); }
Int b_entry(std::int64_t j, std::int64_t k) { return shared_table(MatrixFamily::b).entry(j, k); }
Int c_entry(std::int64_t j, std::int64_t k) { return shared_table(MatrixFamily::c).entry(j, k); }

std::int64_t valuation_bound(MatrixFamily family, std::int64_t row, std::int64_t col) {
    switch (family) {
        case MatrixFamily::m:
            return floor_div(5 * col - row - 1, 2);
        case MatrixFamily::a:
        case MatrixFamily::c: {
            // odd rows 2j-1: j + floor((5k-5)/2); even rows 2j: j + floor((5k-3)/2)
            bool odd = (row % 2) == 1;
            std::int64_t j = odd ? (row + 1) / 2 : row / 2;
            return j + floor_div(5 * col - (odd ? 5 : 3), 2);
        }
        case MatrixFamily::b:
            return row + floor_div(5 * col - 5, 2);
    }
    throw std::logic_error("unknown family");
}

BoundReport verify_valuation_bounds(MatrixFamily family, std::int64_t row_max,
                                    std::int64_t col_max) {
    if (row_max < 1 || col_max < 1) throw std::invalid_argument("empty bound range");
    BoundReport report;
    report.family = family;
    report.row_max = row_max;
    report.col_max = col_max;
    MatrixTable table(family);
    for (std::int64_t row = 1; row <= row_max; ++row) {
        for (std::int64_t col = 1; col <= col_max; ++col) {
            Valuation v = pi5(table.entry(row, col));
            std::int64_t required = valuation_bound(family, row, col);
            ++report.checked;
            if (!v.at_least(required)) {
                report.violations.push_back(BoundViolation{row, col, v, required});
            }
        }
    }
    return report;
}

}  // namespace penta5
