// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "chronop/energy_translation.hpp"

using namespace chronop;
using namespace chronop::energy;
using lattice::Complex;
using lattice::Model;
using lattice::MomentumGrid;
using lattice::Projection;
using lattice::SpinorGrid;

namespace {

StationarySeries stationary_series(double E, int samples, double dt) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::vector<Complex> profile(40);
    for (auto& v : profile) v = Complex(amp(rng), amp(rng));
    StationarySeries s;
    s.t0 = 0;
    s.dt = dt;
    s.samples.resize(samples);
    for (int j = 0; j < samples; ++j) {
        const Complex ph = std::polar(1.0, -E * s.t(j));
        s.samples[j].resize(profile.size());
        for (std::size_t x = 0; x < profile.size(); ++x) s.samples[j][x] = ph * profile[x];
    }
    return s;
}

}  // namespace

TEST_CASE("spectrum shifts by exactly alpha under a new reference surface") {
    const MomentumGrid g(16, 4.0);
    const lattice::OperatorMatrix h = lattice::dirac_hamiltonian(g, 1.0);
    const SpectrumReport base = spectrum(h);
    for (double alpha : {0.5, 1.0, 2.0}) {
        const SpectrumReport shifted = spectrum(shift_hamiltonian(h, alpha));
        REQUIRE(shifted.eigenvalues.size() == base.eigenvalues.size());
        double dev = 0, dev_diff = 0;
        for (std::size_t i = 0; i < base.eigenvalues.size(); ++i)
            dev = std::max(dev,
                           std::abs(shifted.eigenvalues[i] - (base.eigenvalues[i] - alpha)));
        const auto bd = base.pairwise_differences();
        const auto sd = shifted.pairwise_differences();
        for (std::size_t i = 0; i < bd.size(); ++i)
            dev_diff = std::max(dev_diff, std::abs(bd[i] - sd[i]));
        CHECK(dev <= 1e-12);
        CHECK(dev_diff <= 1e-12);
    }

    SUBCASE("alpha = 0 leaves the matrix untouched") {
        const lattice::OperatorMatrix same = shift_hamiltonian(h, 0.0);
        CHECK((same.mat - h.mat).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("pairwise differences are recomputed, not stored") {
    SpectrumReport r;
    r.eigenvalues = {1.0, 2.0, 4.0};
    CHECK(r.pairwise_differences() == std::vector<double>{1.0, 3.0, 2.0});
    r.eigenvalues[2] = 10.0;
    CHECK(r.pairwise_differences() == std::vector<double>{1.0, 9.0, 8.0});
}

TEST_CASE("phase modulation lowers the fitted frequency") {
    SUBCASE("frequency matches the constructed energy") {
        const auto s = stationary_series(5.0, 64, 0.1);
        CHECK(std::abs(fit_frequency(s) - 5.0) <= 1e-10);
    }
    SUBCASE("modulation by alpha leaves E - alpha") {
        const auto s = stationary_series(5.0, 64, 0.1);
        const auto mod = phase_modulate(s, 3.0);
        CHECK(std::abs(fit_frequency(mod) - 2.0) <= 1e-8);
        // spatial profile magnitudes untouched
        double dev = 0;
        for (std::size_t j = 0; j < s.samples.size(); ++j)
            for (std::size_t x = 0; x < s.samples[j].size(); ++x)
                dev = std::max(dev, std::abs(std::abs(mod.samples[j][x]) -
                                             std::abs(s.samples[j][x])));
        CHECK(dev <= 1e-12);
    }
    SUBCASE("alpha equal to the energy freezes the series") {
        const auto s = stationary_series(2.0, 32, 0.1);
        CHECK(std::abs(fit_frequency(phase_modulate(s, 2.0))) <= 1e-8);
    }
    SUBCASE("alpha = 0 is the identity") {
        const auto s = stationary_series(2.0, 32, 0.1);
        const auto mod = phase_modulate(s, 0.0);
        double dev = 0;
        for (std::size_t j = 0; j < s.samples.size(); ++j)
            for (std::size_t x = 0; x < s.samples[j].size(); ++x)
                dev = std::max(dev, std::abs(mod.samples[j][x] - s.samples[j][x]));
        CHECK(dev == 0.0);
    }
    SUBCASE("non-stationary input is refused") {
        auto s = stationary_series(2.0, 32, 0.1);
        s.samples[7][3] += Complex(0.5, 0);
        CHECK_THROWS_AS(phase_modulate(s, 1.0), NonStationaryInput);
    }
}

TEST_CASE("energy ladder on the massless helicity packet") {
    const MomentumGrid g(256, 8.0);  // dp = 1/16
    const Model m0 = Model::dirac(0.0);
    const SpinorGrid s =
        lattice::gaussian_packet(g, m0, 0.0, 2.0, 0.25, Projection::helicity_plus);

    SUBCASE("alpha = 0 is the identity") {
        const SpinorGrid out = ladder_apply(s, 0.0);
        double dev = 0;
        for (std::size_t i = 0; i < s.values.size(); ++i)
            dev = std::max(dev, std::abs(out.values[i] - s.values[i]));
        CHECK(dev == 0.0);
    }
    SUBCASE("expectation of H rises by alpha") {
        const double h0 = lattice::hamiltonian_expectation(s);
        CHECK(std::abs(h0 - 2.0) <= 1e-10);
        const SpinorGrid up = ladder_apply(s, 1.0);
        CHECK(std::abs(lattice::hamiltonian_expectation(up) - (h0 + 1.0)) <= 1e-8);
        CHECK(std::abs(up.norm_sq() - 1.0) <= 1e-12);
    }
    SUBCASE("negative helicity works the same way") {
        const SpinorGrid sm =
            lattice::gaussian_packet(g, m0, 0.0, 2.0, 0.25, Projection::helicity_minus);
        const double h0 = lattice::hamiltonian_expectation(sm);
        CHECK(std::abs(h0 - (-2.0)) <= 1e-10);
        const SpinorGrid up = ladder_apply(sm, 0.5);
        CHECK(std::abs(lattice::hamiltonian_expectation(up) - (h0 + 0.5)) <= 1e-8);
    }
    SUBCASE("pairwise expectation differences are ladder-invariant") {
        const SpinorGrid a =
            lattice::gaussian_packet(g, m0, 0.0, 1.0, 0.25, Projection::helicity_plus);
        const SpinorGrid b =
            lattice::gaussian_packet(g, m0, 2.0, 3.0, 0.25, Projection::helicity_plus);
        const double gap = lattice::hamiltonian_expectation(b) -
                           lattice::hamiltonian_expectation(a);
        const double gap_up = lattice::hamiltonian_expectation(ladder_apply(b, 1.5)) -
                              lattice::hamiltonian_expectation(ladder_apply(a, 1.5));
        CHECK(std::abs(gap_up - gap) <= 1e-8);
    }
    SUBCASE("round trip restores the state") {
        const SpinorGrid back = ladder_apply(ladder_apply(s, 1.0), -1.0);
        double dev = 0;
        for (std::size_t i = 0; i < s.values.size(); ++i)
            dev = std::max(dev, std::abs(back.values[i] - s.values[i]));
        CHECK(dev <= 1e-10);
    }
    SUBCASE("off-lattice alpha is refused") {
        CHECK_THROWS_AS(ladder_apply(s, 0.5 * g.dp()), OffLattice);
    }
    SUBCASE("massive models are refused") {
        const SpinorGrid sm = lattice::gaussian_packet(g, Model::dirac(1.0), 0.0, 2.0,
                                                       0.25, Projection::positive_energy);
        CHECK_THROWS_AS(ladder_apply(sm, 1.0), MassiveModel);
    }
}

TEST_CASE("energy propagation by a hermitian generator") {
    const MomentumGrid g(16, 2.0 * std::numbers::pi);  // dx = 1/2
    const lattice::OperatorMatrix tq =
        lattice::time_function_operator(g, lattice::TimeFunctionKind::quadratic, 1.0);

    SUBCASE("dE = 0 is the identity") {
        Eigen::VectorXcd phi = Eigen::VectorXcd::Random(g.n);
        CHECK((energy_propagate(phi, tq, 0.0) - phi).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("norm is preserved") {
        Eigen::VectorXcd phi = Eigen::VectorXcd::Random(g.n);
        CHECK(std::abs(energy_propagate(phi, tq, 2.7).norm() - phi.norm()) <= 1e-12);
    }
    SUBCASE("position mode picks up the eigenphase") {
        const double x0 = 2.0, dE = 0.8;
        const SpinorGrid mode = position_eigenstate(g, x0);
        const Eigen::VectorXcd phi0 = lattice::to_vector(mode);
        const Eigen::VectorXcd phi = energy_propagate(phi0, tq, dE);
        const Complex expect = std::polar(1.0, x0 * x0 * dE / 2.0);
        CHECK((phi - expect * phi0).cwiseAbs().maxCoeff() <= 1e-8);
    }
    SUBCASE("group law in dE") {
        Eigen::VectorXcd phi = Eigen::VectorXcd::Random(g.n);
        const Eigen::VectorXcd one = energy_propagate(energy_propagate(phi, tq, 1.1), tq, 0.6);
        const Eigen::VectorXcd two = energy_propagate(phi, tq, 1.7);
        CHECK((one - two).cwiseAbs().maxCoeff() <= 1e-10);
    }
    SUBCASE("non-hermitian generators are refused") {
        lattice::OperatorMatrix bad = tq;
        bad.mat(0, 1) += Complex(0.5, 0.25);
        bad.hermitian = true;  // lying flag is caught by the defect check
        Eigen::VectorXcd phi = Eigen::VectorXcd::Random(g.n);
        CHECK_THROWS_AS(energy_propagate(phi, bad, 1.0), NonHermitianGenerator);
    }
}

TEST_CASE("lattice position eigenstates") {
    const MomentumGrid g(64, 8.0);

    SUBCASE("unit norm and pairwise orthogonality, brute force") {
        const MomentumGrid small(16, 4.0);
        double max_off = 0, max_diag = 0;
        for (int a = 0; a < small.n; ++a) {
            const SpinorGrid sa = position_eigenstate(small, small.x(a));
            for (int b = 0; b < small.n; ++b) {
                const SpinorGrid sb = position_eigenstate(small, small.x(b));
                Complex ov = 0;
                for (int k = 0; k < small.n; ++k)
                    ov += std::conj(sa.at(k, 0)) * sb.at(k, 0) * small.dp();
                if (a == b) max_diag = std::max(max_diag, std::abs(ov - 1.0));
                else max_off = std::max(max_off, std::abs(ov));
            }
        }
        CHECK(max_diag <= 1e-12);
        CHECK(max_off <= 1e-12);
        // the translation-invariant scan agrees with brute force
        CHECK(orthonormality_check(small) <= 1e-12);
    }
    SUBCASE("position operator reproduces the eigenvalue") {
        const lattice::OperatorMatrix x = lattice::position_operator(g);
        for (int j : {0, 17, 40}) {
            const double x0 = g.x(j);
            const SpinorGrid s = position_eigenstate(g, x0);
            const SpinorGrid xs = lattice::apply(x, s);
            double dev = 0;
            for (int k = 0; k < g.n; ++k)
                dev = std::max(dev, std::abs(xs.at(k, 0) - x0 * s.at(k, 0)));
            CHECK(dev <= 1e-10);
        }
    }
    SUBCASE("off-lattice positions are refused") {
        CHECK_THROWS_AS(position_eigenstate(g, g.x(3) + 0.3 * g.dx()), OffLattice);
        CHECK_THROWS_AS(position_eigenstate(g, g.box_length()), OffLattice);
    }
}

TEST_CASE("spectrum csv is sorted and deterministic") {
    const MomentumGrid g(8, 4.0);
    const SpectrumReport r = spectrum(lattice::dirac_hamiltonian(g, 1.0));
    for (std::size_t i = 0; i + 1 < r.eigenvalues.size(); ++i)
        CHECK(r.eigenvalues[i] <= r.eigenvalues[i + 1]);
    std::ostringstream a, b;
    write_spectrum_csv(a, r);
    write_spectrum_csv(b, r);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("eigenvalue\n", 0) == 0);
}
