// SPDX-License-Identifier: Apache-2.0
#include "chronop/opcalc_parser.hpp"

#include <cctype>

namespace chronop::opcalc {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    OperatorExpression parse() {
        OperatorExpression e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

  private:
    OperatorExpression expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        }
        OperatorExpression e = term();
        if (neg) e = -e;
        while (true) {
            skip_ws();
            const char c = peek();
            if (c == '+') {
                ++pos_;
                e += term();
            } else if (c == '-') {
                ++pos_;
                e -= term();
            } else {
                return e;
            }
        }
    }

    OperatorExpression term() {
        OperatorExpression e = factor();
        while (true) {
            skip_ws();
            const char c = peek();
            if (c == '*') {
                ++pos_;
                e = e * factor();
            } else if (c == '/') {
                ++pos_;
                e = divide(e, factor());
            } else {
                return e;
            }
        }
    }

    OperatorExpression factor() {
        skip_ws();
        const char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (c == '(') {
            ++pos_;
            OperatorExpression e = expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++pos_;
            OperatorExpression a = expr();
            expect(',');
            OperatorExpression b = expr();
            expect(']');
            return a * b - b * a;
        }
        if (c == '{') {
            ++pos_;
            OperatorExpression a = expr();
            expect(',');
            OperatorExpression b = expr();
            expect('}');
            return a * b + b * a;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
        fail(std::string("unexpected character '") + c + "'");
    }

    OperatorExpression number() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return OperatorExpression::scalar(
            ExactComplex(parse_rational(s_.substr(start, pos_ - start))));
    }

    OperatorExpression ident() {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        const std::string id = s_.substr(start, pos_ - start);
        if (id == "i") return OperatorExpression::scalar(ExactComplex::i());
        if (id == "unit") return OperatorExpression::unit();
        if (auto g = gen_from_name(id)) return OperatorExpression::generator(*g);
        throw UnknownGenerator("unknown generator: " + id);
    }

    static OperatorExpression divide(const OperatorExpression& a,
                                     const OperatorExpression& b) {
        if (b.term_count() != 1 || !b.terms().begin()->first.empty())
            throw ParseError("can only divide by a scalar");
        const ExactComplex d = b.terms().begin()->second;
        if (d.is_zero()) throw ParseError("division by zero");
        // exact inverse: conj(d) / |d|^2
        const Rational norm = d.re * d.re + d.im * d.im;
        const ExactComplex inv(d.re / norm, -d.im / norm);
        return a.scaled(inv);
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

OperatorExpression parse_expression(const std::string& text) {
    return Parser(text).parse();
}

}  // namespace chronop::opcalc
