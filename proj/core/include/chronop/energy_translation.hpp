// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "chronop/lattice.hpp"

namespace chronop::energy {

struct OffLattice : std::runtime_error {
    explicit OffLattice(const std::string& what) : std::runtime_error(what) {}
};
struct MassiveModel : std::runtime_error {
    MassiveModel()
        : std::runtime_error(
              "energy ladder is exact only for the massless Dirac model") {}
};
struct NonHermitianGenerator : std::runtime_error {
    NonHermitianGenerator() : std::runtime_error("generator is not hermitian") {}
};
struct NonStationaryInput : std::runtime_error {
    NonStationaryInput()
        : std::runtime_error("series is not of the stationary form exp(-iEt) u(x)") {}
};

/// Sorted eigenvalues; pairwise differences are always recomputed from
/// them, never stored, so the two can not drift apart.
struct SpectrumReport {
    std::vector<double> eigenvalues;

    /// e_j - e_i for all i < j, in (i, j) lexicographic order.
    std::vector<double> pairwise_differences() const;
};

/// Eigenvalues of a hermitian operator matrix, ascending.
SpectrumReport spectrum(const lattice::OperatorMatrix& op);

/// H - alpha I: a new zero-energy reference surface. Shifts every
/// eigenvalue by -alpha and no pairwise difference.
lattice::OperatorMatrix shift_hamiltonian(const lattice::OperatorMatrix& h, double alpha);

/// Spatial profile sampled at uniformly spaced times.
struct StationarySeries {
    double t0 = 0;
    double dt = 0;
    std::vector<std::vector<lattice::Complex>> samples;  // samples[j] = profile at t_j

    double t(std::size_t j) const { return t0 + static_cast<double>(j) * dt; }
    void validate() const;
};

/// Multiplies the series by exp(i alpha t_j). The input must be
/// stationary (throws NonStationaryInput otherwise); the output is again
/// stationary with its frequency lowered by alpha and the spatial
/// profile untouched.
StationarySeries phase_modulate(const StationarySeries& series, double alpha);

/// Frequency omega of a stationary series psi(t) = exp(-i omega t) u,
/// from the phase advance between consecutive samples. |omega dt| must
/// stay below pi.
double fit_frequency(const StationarySeries& series);

/// exp(i alpha T) with T = alpha1 (x) xhat on the massless Dirac model:
/// an exact cyclic mode shift by alpha/dp in the helicity eigenbasis
/// (+alpha for positive helicity, -alpha for negative). alpha must be an
/// integer multiple of the grid spacing; throws OffLattice otherwise and
/// MassiveModel when the state's mass is nonzero.
lattice::SpinorGrid ladder_apply(const lattice::SpinorGrid& state, double alpha);

/// phi = exp(i T dE) phi0, the exact solution of -i dphi/dE = T phi for
/// an E-independent hermitian generator.
Eigen::VectorXcd energy_propagate(const Eigen::VectorXcd& phi0,
                                  const lattice::OperatorMatrix& generator, double dE);

/// Momentum-space samples exp(-i p_k x0)/sqrt(n dp) of the lattice
/// position eigenstate |x0>. x0 must be a lattice site.
lattice::SpinorGrid position_eigenstate(const lattice::MomentumGrid& grid, double x0);

/// max |<x0|x0'>| over distinct lattice sites (translation-invariant, so
/// only the n-1 distinct separations are scanned).
double orthonormality_check(const lattice::MomentumGrid& grid);

/// Sorted eigenvalues, one per line under an "eigenvalue" header.
void write_spectrum_csv(std::ostream& os, const SpectrumReport& report);

}  // namespace chronop::energy
