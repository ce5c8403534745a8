#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "penta5/etaq.hpp"
#include "penta5/report.hpp"
#include "penta5/series.hpp"

namespace penta5 {

/// R(q^k)^e.
struct RFactor {
    std::int64_t arg_power = 1;  // k >= 1
    std::int64_t exponent = 1;

    bool operator==(const RFactor&) const = default;
};

using Factor = std::variant<EtaFactor, GenEtaFactor, RFactor>;

/// coeff * q^qshift * factors, in written order.
struct Term {
    Int coeff = 1;
    std::int64_t qshift = 0;
    std::vector<Factor> factors;

    bool operator==(const Term&) const = default;
};

/// A sum of terms. The empty sum denotes 0.
struct QExpression {
    std::vector<Term> terms;

    bool operator==(const QExpression&) const = default;
};

/// Parses the expression grammar
///   expr   := term (('+'|'-') term)* ;
///   term   := ['-'] atom (('*'|'/') atom)* ;
///   atom   := INT | 'q' ['^' INT] | 'E' INT ['^' SINT]
///           | 'G(' INT ',' INT ')' ['^' SINT]
///           | 'R(q^' INT ')' ['^' SINT] | '(' expr ')' ;
/// with insignificant whitespace and unbounded integers.
///
/// Products distribute over parenthesized sums so the result is always
/// a flat term list; no like terms are combined and nothing cancels.
/// Division is exponent negation, so the divisor must be a single term
/// with coefficient +-1. Throws SyntaxError with a byte offset and the
/// expected-token set.
QExpression parse(std::string_view text);

/// Canonical printer; parse(format(e)) == e for any expression the
/// parser can produce (term and factor order is preserved).
std::string format(const QExpression& expr);
std::string format(const Term& term);

/// Expands the expression to a series exact below `bound` (factors are
/// expanded with per-term headroom compensating q-shifts, so the result
/// truncation — the achieved bound — is bound itself for well-formed
/// expressions).
LaurentSeries evaluate(const QExpression& expr, std::int64_t bound);

/// Expands both sides and compares them on their common sound bound,
/// exactly or mod `modulus`.
IdentityReport verify_identity(const QExpression& lhs, const QExpression& rhs,
                               std::int64_t bound,
                               const std::optional<Int>& modulus = std::nullopt);

}  // namespace penta5
