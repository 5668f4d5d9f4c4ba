// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>

#include "chronop/exact.hpp"

namespace chronop::clifford {

/// 2x2 matrix over exact complex rationals, the (1+1)-dimensional Dirac
/// matrix representation:
///
///   alpha1 = [[0,1],[1,0]]   beta = [[1,0],[0,-1]]
///
/// with gamma0 = beta, gamma1 = beta*alpha1 and the boost generator
/// spin01 = (i/2)*alpha1. The representation is fixed so that identity
/// checks are bit-exact.
struct DiracMatrix {
    std::array<std::array<ExactComplex, 2>, 2> e{};
    std::string label;

    const ExactComplex& at(int r, int c) const { return e[r][c]; }
    ExactComplex& at(int r, int c) { return e[r][c]; }

    bool is_zero() const;

    friend bool operator==(const DiracMatrix& a, const DiracMatrix& b) {
        return a.e == b.e;
    }
};

DiracMatrix zero();
DiracMatrix identity();
DiracMatrix alpha1();
DiracMatrix beta();
DiracMatrix gamma0();
DiracMatrix gamma1();
DiracMatrix spin01();

/// The fixed representation pair {alpha1, beta}. All Clifford relations
/// alpha1^2 = beta^2 = I, {alpha1, beta} = 0 hold exactly for it.
struct Representation {
    DiracMatrix alpha1;
    DiracMatrix beta;
};
Representation make_representation();

DiracMatrix mat_add(const DiracMatrix& a, const DiracMatrix& b);
DiracMatrix mat_sub(const DiracMatrix& a, const DiracMatrix& b);
DiracMatrix mat_scale(const ExactComplex& c, const DiracMatrix& a);
DiracMatrix mat_product(const DiracMatrix& a, const DiracMatrix& b);

/// ab - ba
DiracMatrix mat_commutator(const DiracMatrix& a, const DiracMatrix& b);
/// ab + ba
DiracMatrix mat_anticommutator(const DiracMatrix& a, const DiracMatrix& b);

std::string to_string(const DiracMatrix& m);

}  // namespace chronop::clifford
