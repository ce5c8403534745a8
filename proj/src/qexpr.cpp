#include "penta5/qexpr.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace penta5 {

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000'000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    QExpression run() {
        QExpression expr = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("'+', '-', '*', '/', or end of input");
        }
        return expr;
    }

private:
    [[noreturn]] void fail(const std::string& expected, const std::string& detail = {}) {
        throw SyntaxError(pos_, expected, detail);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(what);
    }

    Int parse_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) fail("an integer");
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::int64_t parse_bounded_int(const char* role) {
        std::size_t at = pos_;
        Int n = parse_number();
        if (n > kMaxExponent) {
            throw SyntaxError(at, "a smaller integer", std::string(role) + " out of range");
        }
        return n.get_si();
    }

    // optional '^' with sign allowed when signed_ok
    std::int64_t parse_exponent(bool signed_ok) {
        if (!accept('^')) return 1;
        bool neg = false;
        if (signed_ok && accept('-')) neg = true;
        std::int64_t e = parse_bounded_int("exponent");
        return neg ? -e : e;
    }

    QExpression parse_expr() {
        QExpression expr = parse_term();
        while (true) {
            if (accept('+')) {
                append(expr, parse_term(), false);
            } else if (accept('-')) {
                append(expr, parse_term(), true);
            } else {
                break;
            }
        }
        return expr;
    }

    static void append(QExpression& dst, QExpression src, bool negated) {
        for (Term& t : src.terms) {
            if (negated) t.coeff = -t.coeff;
            dst.terms.push_back(std::move(t));
        }
    }

    QExpression parse_term() {
        bool negated = accept('-');
        QExpression product = parse_atom();
        while (true) {
            if (accept('*')) {
                product = distribute(product, parse_atom());
            } else if (accept('/')) {
                std::size_t at = pos_;
                product = distribute(product, reciprocal(parse_atom(), at));
            } else {
                break;
            }
        }
        if (negated) {
            for (Term& t : product.terms) t.coeff = -t.coeff;
        }
        return product;
    }

    static QExpression distribute(const QExpression& a, const QExpression& b) {
        QExpression out;
        out.terms.reserve(a.terms.size() * b.terms.size());
        for (const Term& ta : a.terms) {
            for (const Term& tb : b.terms) {
                Term t;
                t.coeff = ta.coeff * tb.coeff;
                t.qshift = ta.qshift + tb.qshift;
                t.factors = ta.factors;
                t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
                out.terms.push_back(std::move(t));
            }
        }
        return out;
    }

    // Division is sugar for exponent negation, so the divisor must be a
    // single term with unit coefficient.
    QExpression reciprocal(QExpression e, std::size_t at) {
        if (e.terms.size() != 1) {
            throw SyntaxError(at, "a single-term divisor", "cannot divide by a sum");
        }
        Term& t = e.terms.front();
        if (t.coeff != 1 && t.coeff != -1) {
            throw SyntaxError(at, "a divisor with coefficient +-1",
                              "cannot invert coefficient " + t.coeff.get_str());
        }
        t.qshift = -t.qshift;
        for (Factor& f : t.factors) {
            std::visit([](auto& x) { x.exponent = -x.exponent; }, f);
        }
        return e;
    }

    QExpression parse_atom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Term t;
            t.coeff = parse_number();
            return QExpression{{std::move(t)}};
        }
        switch (c) {
            case 'q': {
                ++pos_;
                Term t;
                t.qshift = parse_exponent(false);
                return QExpression{{std::move(t)}};
            }
            case 'E': {
                ++pos_;
                std::size_t at = pos_;
                std::int64_t j = parse_bounded_int("eta base");
                if (j < 1) throw SyntaxError(at, "a positive eta base");
                Term t;
                t.factors.push_back(EtaFactor{j, parse_exponent(true)});
                return QExpression{{std::move(t)}};
            }
            case 'G': {
                ++pos_;
                expect('(', "'('");
                std::size_t at = pos_;
                std::int64_t a = parse_bounded_int("residue");
                expect(',', "','");
                std::int64_t m = parse_bounded_int("modulus");
                expect(')', "')'");
                if (a < 1 || a > m) {
                    throw SyntaxError(at, "1 <= residue <= modulus");
                }
                Term t;
                t.factors.push_back(GenEtaFactor{a, m, parse_exponent(true)});
                return QExpression{{std::move(t)}};
            }
            case 'R': {
                ++pos_;
                expect('(', "'('");
                expect('q', "'q'");
                expect('^', "'^'");
                std::size_t at = pos_;
                std::int64_t k = parse_bounded_int("argument power");
                if (k < 1) throw SyntaxError(at, "a positive argument power");
                expect(')', "')'");
                Term t;
                t.factors.push_back(RFactor{k, parse_exponent(true)});
                return QExpression{{std::move(t)}};
            }
            case '(': {
                ++pos_;
                QExpression inner = parse_expr();
                expect(')', "')'");
                return inner;
            }
            default:
                fail("an integer, 'q', 'E', 'G', 'R', or '('");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

struct Piece {
    std::string base;
    std::int64_t exponent;
};

std::vector<Piece> term_pieces(const Term& term) {
    std::vector<Piece> pieces;
    if (term.qshift != 0) pieces.push_back({"q", term.qshift});
    for (const Factor& f : term.factors) {
        if (const auto* eta = std::get_if<EtaFactor>(&f)) {
            pieces.push_back({"E" + std::to_string(eta->base), eta->exponent});
        } else if (const auto* gen = std::get_if<GenEtaFactor>(&f)) {
            pieces.push_back({"G(" + std::to_string(gen->residue) + "," +
                                  std::to_string(gen->modulus) + ")",
                              gen->exponent});
        } else {
            const auto& r = std::get<RFactor>(f);
            pieces.push_back({"R(q^" + std::to_string(r.arg_power) + ")", r.exponent});
        }
    }
    return pieces;
}

std::string format_magnitude(const Term& term) {
    std::vector<Piece> pieces = term_pieces(term);
    Int mag = term.coeff < 0 ? Int(-term.coeff) : term.coeff;
    std::ostringstream out;
    bool coeff_written = pieces.empty() || mag != 1 || pieces.front().exponent < 0;
    if (coeff_written) out << mag.get_str();
    bool first = !coeff_written;
    for (const Piece& p : pieces) {
        if (first) {
            first = false;
        } else {
            out << (p.exponent < 0 ? '/' : '*');
        }
        out << p.base;
        std::int64_t e = p.exponent < 0 ? -p.exponent : p.exponent;
        if (e != 1) out << '^' << e;
    }
    return out.str();
}

}  // namespace

QExpression parse(std::string_view text) { return Parser(text).run(); }

std::string format(const Term& term) {
    return (term.coeff < 0 ? "-" : "") + format_magnitude(term);
}

std::string format(const QExpression& expr) {
    if (expr.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : expr.terms) {
        if (first) {
            if (t.coeff < 0) out << '-';
            first = false;
        } else {
            out << (t.coeff < 0 ? " - " : " + ");
        }
        out << format_magnitude(t);
    }
    return out.str();
}

namespace {

// Base expansions keyed by (kind, p1, p2, bound); exponents are applied
// per factor so powers of the same base reuse one expansion.
using ExpansionCache = std::map<std::array<std::int64_t, 4>, LaurentSeries>;

const LaurentSeries& base_expansion(const Factor& f, std::int64_t bound, ExpansionCache& cache) {
    std::array<std::int64_t, 4> key{};
    if (const auto* eta = std::get_if<EtaFactor>(&f)) {
        key = {0, eta->base, 0, bound};
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, expand_eta(eta->base, bound)).first;
        return it->second;
    }
    if (const auto* gen = std::get_if<GenEtaFactor>(&f)) {
        key = {1, gen->residue, gen->modulus, bound};
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, expand_gen_eta(gen->residue, gen->modulus, bound)).first;
        }
        return it->second;
    }
    const auto& r = std::get<RFactor>(f);
    key = {2, r.arg_power, 0, bound};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, expand_rr_quotient(r.arg_power, bound)).first;
    return it->second;
}

std::int64_t factor_exponent(const Factor& f) {
    return std::visit([](const auto& x) { return x.exponent; }, f);
}

}  // namespace

LaurentSeries evaluate(const QExpression& expr, std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("truncation bound must be >= 1");
    ExpansionCache cache;
    LaurentSeries sum = LaurentSeries::zero(bound);
    for (const Term& term : expr.terms) {
        // factors all have constant term 1, so expanding them to
        // bound - qshift makes the shifted term exact below bound
        std::int64_t term_bound = bound - term.qshift;
        if (term_bound < 1 || term.coeff == 0) continue;
        LaurentSeries prod = LaurentSeries::one(term_bound);
        for (const Factor& f : term.factors) {
            prod = mul(prod, int_pow(base_expansion(f, term_bound, cache), factor_exponent(f)));
        }
        sum = add(sum, scale(term.coeff, prod).shifted(term.qshift));
    }
    return sum;
}

IdentityReport verify_identity(const QExpression& lhs, const QExpression& rhs,
                               std::int64_t bound, const std::optional<Int>& modulus) {
    return compare_series(evaluate(lhs, bound), evaluate(rhs, bound), modulus);
}

}  // namespace penta5
