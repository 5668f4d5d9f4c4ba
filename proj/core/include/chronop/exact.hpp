// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

namespace chronop {

/// Arbitrary-precision rational, canonicalized (gcd-reduced, positive
/// denominator) on construction.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on bad input.
Rational parse_rational(const std::string& text);

/// Complex number with exact rational real and imaginary parts.
///
/// Closed under +, -, *; no floating point anywhere. Used as the
/// coefficient field of operator expressions and as matrix entries.
struct ExactComplex {
    Rational re{0};
    Rational im{0};

    ExactComplex() = default;
    ExactComplex(Rational real) : re(std::move(real)) {}
    ExactComplex(Rational real, Rational imag)
        : re(std::move(real)), im(std::move(imag)) {}
    ExactComplex(long real) : re(make_rational(real)) {}

    static ExactComplex one() { return ExactComplex(1); }
    static ExactComplex i() { return ExactComplex(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    ExactComplex conj() const { return {re, -im}; }

    ExactComplex& operator+=(const ExactComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ExactComplex& operator-=(const ExactComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ExactComplex& operator*=(const ExactComplex& o) {
        const Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }
};

/// Canonical display form: "0", "1", "-1", "3/2", "i", "-i", "3/2*i",
/// "(1+2*i)", "(1/2-i)". Pure terms omit the parentheses; the output
/// parses back through the expression grammar.
std::string to_string(const ExactComplex& z);

}  // namespace chronop
