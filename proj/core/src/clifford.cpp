// SPDX-License-Identifier: Apache-2.0
#include "chronop/clifford.hpp"

namespace chronop::clifford {

namespace {

DiracMatrix make(long a00, long a01, long a10, long a11, std::string label) {
    DiracMatrix m;
    m.e[0][0] = ExactComplex(a00);
    m.e[0][1] = ExactComplex(a01);
    m.e[1][0] = ExactComplex(a10);
    m.e[1][1] = ExactComplex(a11);
    m.label = std::move(label);
    return m;
}

}  // namespace

bool DiracMatrix::is_zero() const {
    for (const auto& row : e)
        for (const auto& z : row)
            if (!z.is_zero()) return false;
    return true;
}

DiracMatrix zero() { return make(0, 0, 0, 0, "0"); }
DiracMatrix identity() { return make(1, 0, 0, 1, "I"); }
DiracMatrix alpha1() { return make(0, 1, 1, 0, "alpha1"); }
DiracMatrix beta() { return make(1, 0, 0, -1, "beta"); }
DiracMatrix gamma0() { auto m = beta(); m.label = "gamma0"; return m; }

DiracMatrix gamma1() {
    auto m = mat_product(beta(), alpha1());
    m.label = "gamma1";
    return m;
}

DiracMatrix spin01() {
    // (i/4)[gamma0, gamma1] = (i/2) alpha1
    auto m = mat_scale(ExactComplex(Rational(0), Rational(1, 2)), alpha1());
    m.label = "S01";
    return m;
}

Representation make_representation() { return {alpha1(), beta()}; }

DiracMatrix mat_add(const DiracMatrix& a, const DiracMatrix& b) {
    DiracMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[i][j] + b.e[i][j];
    return r;
}

DiracMatrix mat_sub(const DiracMatrix& a, const DiracMatrix& b) {
    DiracMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[i][j] - b.e[i][j];
    return r;
}

DiracMatrix mat_scale(const ExactComplex& c, const DiracMatrix& a) {
    DiracMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = c * a.e[i][j];
    return r;
}

DiracMatrix mat_product(const DiracMatrix& a, const DiracMatrix& b) {
    DiracMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j];
    return r;
}

DiracMatrix mat_commutator(const DiracMatrix& a, const DiracMatrix& b) {
    return mat_sub(mat_product(a, b), mat_product(b, a));
}

DiracMatrix mat_anticommutator(const DiracMatrix& a, const DiracMatrix& b) {
    return mat_add(mat_product(a, b), mat_product(b, a));
}

std::string to_string(const DiracMatrix& m) {
    std::string s = "[[" + to_string(m.e[0][0]) + "," + to_string(m.e[0][1]) + "],[";
    s += to_string(m.e[1][0]) + "," + to_string(m.e[1][1]) + "]]";
    return s;
}

}  // namespace chronop::clifford
