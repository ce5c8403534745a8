#include "penta5/report.hpp"

#include <algorithm>

namespace penta5 {

IdentityReport compare_series(const LaurentSeries& a, const LaurentSeries& b,
                              const std::optional<Int>& modulus) {
    IdentityReport report;
    report.modulus = modulus;
    report.checked_bound = std::min(a.trunc(), b.trunc());

    LaurentSeries x = a.trunc() > report.checked_bound ? a.truncated(report.checked_bound) : a;
    LaurentSeries y = b.trunc() > report.checked_bound ? b.truncated(report.checked_bound) : b;
    if (modulus) {
        x = x.reduced_mod(*modulus);
        y = y.reduced_mod(*modulus);
    }
    if (x == y) {
        report.equal = true;
        return report;
    }
    report.equal = false;
    std::int64_t lo = std::min(x.offset(), y.offset());
    for (std::int64_t e = lo; e < report.checked_bound; ++e) {
        Int cx = x.coeff_at(e);
        Int cy = y.coeff_at(e);
        if (cx != cy) {
            report.mismatch = Mismatch{e, std::move(cx), std::move(cy)};
            break;
        }
    }
    return report;
}

}  // namespace penta5
