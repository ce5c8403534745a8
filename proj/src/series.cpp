#include "penta5/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace penta5 {

void LaurentSeries::canonicalize() {
    if (trunc_ < offset_ + static_cast<std::int64_t>(coeffs_.size())) {
        throw std::logic_error("series truncation below stored coefficients");
    }
    // pad implicit zeros up to trunc so length == trunc - offset
    coeffs_.resize(static_cast<std::size_t>(trunc_ - offset_));
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        offset_ = trunc_;
    } else if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        offset_ += static_cast<std::int64_t>(lead);
    }
}

LaurentSeries LaurentSeries::monomial(Int c, std::int64_t exponent, std::int64_t trunc) {
    if (exponent >= trunc) return zero(trunc);
    std::vector<Int> v;
    v.push_back(std::move(c));
    return LaurentSeries(exponent, std::move(v), trunc);
}

LaurentSeries LaurentSeries::from_coeffs(std::int64_t offset, std::vector<Int> coeffs) {
    std::int64_t trunc = offset + static_cast<std::int64_t>(coeffs.size());
    return LaurentSeries(offset, std::move(coeffs), trunc);
}

LaurentSeries LaurentSeries::from_coeffs(std::int64_t offset, std::vector<Int> coeffs,
                                         std::int64_t trunc) {
    return LaurentSeries(offset, std::move(coeffs), trunc);
}

Int LaurentSeries::coeff_at(std::int64_t e) const {
    if (e >= trunc_) throw BeyondTruncationError(e, trunc_);
    if (e < offset_) return 0;
    return coeffs_[static_cast<std::size_t>(e - offset_)];
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const {
    return LaurentSeries(offset_ + k, coeffs_, trunc_ + k);
}

LaurentSeries LaurentSeries::truncated(std::int64_t t) const {
    if (t > trunc_) throw std::logic_error("truncated() cannot extend a series");
    if (t <= offset_) return zero(t);
    std::vector<Int> v(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(t - offset_));
    return LaurentSeries(offset_, std::move(v), t);
}

LaurentSeries LaurentSeries::reduced_mod(const Int& modulus) const {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    std::vector<Int> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        mpz_mod(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), modulus.get_mpz_t());
    }
    return LaurentSeries(offset_, std::move(v), trunc_);
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    std::int64_t trunc = std::min(a.trunc_, b.trunc_);
    std::int64_t offset = std::min(a.offset_, b.offset_);
    if (offset >= trunc) return LaurentSeries::zero(trunc);
    std::vector<Int> v(static_cast<std::size_t>(trunc - offset));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        std::int64_t e = a.offset_ + static_cast<std::int64_t>(i);
        if (e >= trunc) break;
        v[static_cast<std::size_t>(e - offset)] = a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        std::int64_t e = b.offset_ + static_cast<std::int64_t>(i);
        if (e >= trunc) break;
        v[static_cast<std::size_t>(e - offset)] += b.coeffs_[i];
    }
    return LaurentSeries(offset, std::move(v), trunc);
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
    std::int64_t trunc = std::min(a.trunc_ + b.offset_, b.trunc_ + a.offset_);
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(trunc);
    std::int64_t offset = a.offset_ + b.offset_;
    std::int64_t len = trunc - offset;
    if (len <= 0) return LaurentSeries::zero(trunc);
    std::vector<Int> v(static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const Int& ai = a.coeffs_[i];
        if (ai == 0) continue;
        std::size_t jmax = std::min<std::size_t>(b.coeffs_.size(),
                                                 static_cast<std::size_t>(len) - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b.coeffs_[j] != 0) {
                mpz_addmul(v[i + j].get_mpz_t(), ai.get_mpz_t(), b.coeffs_[j].get_mpz_t());
            }
        }
    }
    return LaurentSeries(offset, std::move(v), trunc);
}

LaurentSeries scale(const Int& c, const LaurentSeries& a) {
    if (c == 0) return LaurentSeries::zero(a.trunc_);
    std::vector<Int> v(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = c * a.coeffs_[i];
    return LaurentSeries(a.offset_, std::move(v), a.trunc_);
}

LaurentSeries inverse(const LaurentSeries& a) {
    if (a.is_zero()) throw ZeroSeriesError();
    const Int& lead = a.coeffs_.front();
    if (lead != 1 && lead != -1) throw NonUnitLeadingError(lead.get_str());
    // b has offset -a.offset and bound a.trunc - 2*a.offset; its unit part
    // is the triangular inverse of a's unit part, same length.
    std::int64_t len = a.trunc_ - a.offset_;
    std::vector<Int> v(static_cast<std::size_t>(len));
    bool pos = lead == 1;
    v[0] = lead;
    Int acc;
    for (std::int64_t n = 1; n < len; ++n) {
        acc = 0;
        for (std::int64_t j = 1; j <= n; ++j) {
            const Int& aj = a.coeffs_[static_cast<std::size_t>(j)];
            if (aj != 0) {
                mpz_addmul(acc.get_mpz_t(), aj.get_mpz_t(),
                           v[static_cast<std::size_t>(n - j)].get_mpz_t());
            }
        }
        // v[n] = -acc / lead
        if (pos) {
            mpz_neg(acc.get_mpz_t(), acc.get_mpz_t());
        }
        v[static_cast<std::size_t>(n)] = acc;
    }
    return LaurentSeries(-a.offset_, std::move(v), a.trunc_ - 2 * a.offset_);
}

LaurentSeries int_pow(const LaurentSeries& a, std::int64_t e) {
    if (e == 0) return LaurentSeries::one(a.trunc() - a.offset());
    if (e < 0) return int_pow(inverse(a), -e);
    LaurentSeries result = LaurentSeries::one(a.trunc() - a.offset());
    LaurentSeries base = a;
    std::uint64_t n = static_cast<std::uint64_t>(e);
    while (true) {
        if (n & 1) result = mul(result, base);
        n >>= 1;
        if (n == 0) break;
        base = mul(base, base);
    }
    return result;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream out;
    if (is_zero()) {
        out << "0";
    } else {
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Int& c = coeffs_[i];
            if (c == 0) continue;
            std::int64_t e = offset_ + static_cast<std::int64_t>(i);
            Int abs = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (e == 0) {
                out << abs.get_str();
            } else {
                if (abs != 1) out << abs.get_str() << "*";
                out << "q";
                if (e != 1) out << "^" << e;
            }
        }
    }
    out << " (+ O(q^" << trunc_ << "))";
    return out.str();
}

}  // namespace penta5
