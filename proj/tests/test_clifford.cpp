// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chronop/clifford.hpp"

using namespace chronop;
using namespace chronop::clifford;

namespace {

DiracMatrix from_ints(long a00, long a01, long a10, long a11) {
    DiracMatrix m;
    m.e[0][0] = ExactComplex(a00);
    m.e[0][1] = ExactComplex(a01);
    m.e[1][0] = ExactComplex(a10);
    m.e[1][1] = ExactComplex(a11);
    return m;
}

}  // namespace

TEST_CASE("fixed representation satisfies the Clifford relations") {
    const auto [a1, b] = make_representation();
    CHECK(mat_anticommutator(a1, b).is_zero());
    CHECK(mat_product(a1, a1) == identity());
    CHECK(mat_product(b, b) == identity());
}

TEST_CASE("boost generator is i/2 alpha1") {
    const DiracMatrix s = spin01();
    CHECK(s.e[0][0].is_zero());
    CHECK(s.e[1][1].is_zero());
    CHECK(s.e[0][1] == ExactComplex(Rational(0), Rational(1, 2)));
    CHECK(s.e[1][0] == ExactComplex(Rational(0), Rational(1, 2)));
    // (i/4)[gamma0, gamma1] computed from scratch
    const DiracMatrix comm = mat_commutator(gamma0(), gamma1());
    CHECK(mat_scale(ExactComplex(Rational(0), Rational(1, 4)), comm) == s);
}

TEST_CASE("gamma matrices are built from alpha1 and beta") {
    CHECK(gamma0() == beta());
    CHECK(gamma1() == mat_product(beta(), alpha1()));
    CHECK(mat_product(gamma0(), gamma1()) == alpha1());
}

TEST_CASE("commutator of equal matrices vanishes") {
    for (const DiracMatrix& g : {alpha1(), beta(), gamma1(), spin01()})
        CHECK(mat_commutator(g, g).is_zero());
}

TEST_CASE("beta * alpha1 product, worked out by hand") {
    // [[1,0],[0,-1]] * [[0,1],[1,0]] = [[0,1],[-1,0]]
    CHECK(mat_product(beta(), alpha1()) == from_ints(0, 1, -1, 0));
    CHECK(mat_product(alpha1(), beta()) == from_ints(0, -1, 1, 0));
}

TEST_CASE("commutator antisymmetric, anticommutator symmetric") {
    const DiracMatrix gens[] = {alpha1(), beta(), gamma1(), spin01(), identity()};
    for (const auto& a : gens)
        for (const auto& b : gens) {
            CHECK(mat_add(mat_commutator(a, b), mat_commutator(b, a)).is_zero());
            CHECK(mat_sub(mat_anticommutator(a, b), mat_anticommutator(b, a)).is_zero());
        }
}

TEST_CASE("H(p)^2 = (p^2 + m^2) I for exact rational p, m") {
    const Rational ps[] = {Rational(0), Rational(1), Rational(-3, 7), Rational(4)};
    const Rational ms[] = {Rational(0), Rational(2, 5), Rational(3)};
    for (const Rational& p : ps)
        for (const Rational& m : ms) {
            const DiracMatrix h = mat_add(mat_scale(ExactComplex(p), alpha1()),
                                          mat_scale(ExactComplex(m), beta()));
            const DiracMatrix expect =
                mat_scale(ExactComplex(p * p + m * m), identity());
            CHECK(mat_product(h, h) == expect);
        }
}

TEST_CASE("exact complex arithmetic stays rational") {
    const ExactComplex z(Rational(1, 3), Rational(-2, 7));
    const ExactComplex w(Rational(5, 2), Rational(1));
    CHECK((z * w - w * z).is_zero());
    CHECK(z + (-z) == ExactComplex(0));
    CHECK(z.conj().conj() == z);
    CHECK(to_string(ExactComplex::i()) == "i");
    CHECK(to_string(ExactComplex(Rational(1), Rational(2))) == "(1+2*i)");
    CHECK(to_string(ExactComplex(Rational(1, 2), Rational(-1))) == "(1/2-i)");
    CHECK(to_string(ExactComplex(Rational(0), Rational(-3, 2))) == "-3/2*i");
}
