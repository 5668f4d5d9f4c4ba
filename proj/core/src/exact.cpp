// SPDX-License-Identifier: Apache-2.0
#include "chronop/exact.hpp"

#include <stdexcept>

namespace chronop {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

namespace {

std::string rat_str(const Rational& q) { return q.get_str(); }

// imaginary part rendered as "i", "-i" or "<q>*i"; stays parseable by
// the expression grammar
std::string imag_str(const Rational& q) {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return rat_str(q) + "*i";
}

}  // namespace

std::string to_string(const ExactComplex& z) {
    if (z.is_zero()) return "0";
    if (z.im == 0) return rat_str(z.re);
    if (z.re == 0) return imag_str(z.im);
    std::string s = "(" + rat_str(z.re);
    if (z.im > 0) s += "+" + imag_str(z.im);
    else s += imag_str(z.im);  // already carries the minus sign
    return s + ")";
}

}  // namespace chronop
