#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quartica/multipoly.hpp"

namespace quartica {

struct ParseError : std::invalid_argument {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::invalid_argument(msg + " at offset " + std::to_string(off)), offset(off) {}
};

namespace detail {

// Recursive-descent parser. Accepts explicit or implicit multiplication,
// `^` with optional braces, rational constants, parentheses, `\frac{p}{q}`
// with constant q, and `\cdot`. Identifier runs such as "ab" are split into
// the longest matching ring variables.
template <CoefficientField F>
class PolyParser {
public:
    using P = MultiPoly<F>;

    PolyParser(typename P::RingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

    P parse() {
        P r = expr();
        skip();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            } else if (s_.compare(pos_, 2, "\\,") == 0 || s_.compare(pos_, 2, "\\ ") == 0 ||
                       s_.compare(pos_, 2, "\\;") == 0) {
                pos_ += 2;
            } else if (s_[pos_] == '~') {
                ++pos_;
            } else {
                break;
            }
        }
    }
    bool accept(std::string_view tok) {
        skip();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    P constant(const Rational& r) const { return P::constant(ring_, ring_->field().from_rational(r)); }

    P expr() {
        P acc(ring_);
        bool first = true;
        for (;;) {
            bool neg = false;
            if (accept("+")) {
            } else if (accept("-")) {
                neg = true;
            } else if (!first) {
                break;
            }
            P t = term();
            acc = neg ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }

    bool starts_factor() {
        char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '{' ||
               s_.compare(pos_, 5, "\\frac") == 0;
    }

    P term() {
        P acc = factor();
        for (;;) {
            if (accept("*") || accept("\\cdot")) {
                acc *= factor();
            } else if (accept("/")) {
                std::size_t at = pos_;
                P d = factor();
                acc *= reciprocal_constant(d, at);
            } else if (starts_factor()) {
                acc *= factor();
            } else {
                break;
            }
        }
        return acc;
    }

    P reciprocal_constant(const P& d, std::size_t at) {
        if (!d.is_constant() || d.is_zero()) {
            pos_ = at;
            fail("division by a non-constant or zero expression");
        }
        return P::constant(ring_, ring_->field().one() / d.leading_coeff());
    }

    unsigned exponent() {
        bool braced = accept("{");
        bool paren = !braced && accept("(");
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a non-negative integer exponent");
        unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
        if (braced) expect("}");
        if (paren) expect(")");
        return e;
    }

    P factor() {
        P b = base();
        while (accept("^")) b = b.pow(exponent());
        return b;
    }

    P base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (accept("\\frac")) {
            expect("{");
            P n = expr();
            expect("}");
            expect("{");
            std::size_t at = pos_;
            P d = expr();
            expect("}");
            return n * reciprocal_constant(d, at);
        }
        if (accept("(")) {
            P e = expr();
            expect(")");
            return e;
        }
        if (accept("{")) {
            P e = expr();
            expect("}");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(Rational::parse(std::string(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t best = 0, best_idx = 0;
            for (std::size_t i = 0; i < ring_->nvars(); ++i) {
                const auto& v = ring_->vars()[i];
                if (v.size() > best && s_.compare(pos_, v.size(), v) == 0) {
                    best = v.size();
                    best_idx = i;
                }
            }
            if (best == 0) fail("unknown variable starting with '" + std::string(1, c) + "'");
            pos_ += best;
            return P::variable(ring_, ring_->vars()[best_idx]);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    typename P::RingPtr ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in the given ring. An equation "lhs = rhs" is read
/// as lhs - rhs.
template <CoefficientField F>
MultiPoly<F> parse_poly(const std::shared_ptr<const PolyRing<F>>& ring, std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) return detail::PolyParser<F>(ring, text).parse();
    if (text.find('=', eq + 1) != std::string_view::npos) throw ParseError("more than one '='", eq);
    auto lhs = detail::PolyParser<F>(ring, text.substr(0, eq)).parse();
    auto rhs = detail::PolyParser<F>(ring, text.substr(eq + 1)).parse();
    return lhs - rhs;
}

}  // namespace quartica
