// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace chronop::lattice {

using Complex = std::complex<double>;

struct BandLimitViolation : std::runtime_error {
    explicit BandLimitViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Uniform momentum grid p_k = -p_max + k*dp, k = 0..n-1, with the
/// implied periodic position box of length L = 2*pi/dp sampled at
/// x_j = -L/2 + j*dx. Natural units throughout (hbar = c = 1).
struct MomentumGrid {
    int n;
    double p_max;

    MomentumGrid(int n, double p_max);

    double dp() const { return 2.0 * p_max / n; }
    double box_length() const;  // 2*pi/dp
    double dx() const { return box_length() / n; }
    double p(int k) const { return -p_max + k * dp(); }
    double x(int j) const { return -0.5 * box_length() + j * dx(); }

    friend bool operator==(const MomentumGrid& a, const MomentumGrid& b) {
        return a.n == b.n && a.p_max == b.p_max;
    }
};

enum class ModelKind { dirac, schrodinger };

/// Free model tag. energy_offset selects the zero-energy reference
/// surface: evolution runs under H - energy_offset, which multiplies
/// states by a global phase and leaves every density and current
/// untouched.
struct Model {
    ModelKind kind;
    double mass;
    double energy_offset = 0.0;

    static Model dirac(double m, double offset = 0.0) {
        return {ModelKind::dirac, m, offset};
    }
    static Model schrodinger(double m, double offset = 0.0) {
        return {ModelKind::schrodinger, m, offset};
    }
    int components() const { return kind == ModelKind::dirac ? 2 : 1; }
};

/// Momentum-space state: one or two complex components per grid point,
/// stored mode-major (values[k*c + s]). norm_sq() uses the Riemann
/// weight dp, so normalized states satisfy sum |v|^2 dp = 1.
struct SpinorGrid {
    MomentumGrid grid;
    Model model;
    std::vector<Complex> values;

    SpinorGrid(MomentumGrid g, Model m);

    int components() const { return model.components(); }
    Complex& at(int k, int s) { return values[k * components() + s]; }
    const Complex& at(int k, int s) const { return values[k * components() + s]; }

    double norm_sq() const;
    bool normalized(double tol = 1e-12) const;
    void rescale_to_unit_norm();
};

enum class Projection { none, positive_energy, negative_energy, helicity_plus, helicity_minus };

/// Normalized Gaussian packet exp(-(p-p0)^2/(4 sigma_p^2)) exp(-i p x0),
/// projected (Dirac) onto the requested energy eigenbundle or helicity.
/// Requires |p0| + 4 sigma_p < p_max; throws BandLimitViolation.
SpinorGrid gaussian_packet(const MomentumGrid& grid, const Model& model, double x0,
                           double p0, double sigma_p,
                           Projection proj = Projection::none);

/// Dense matrix realization of an operator on the sampled state space.
struct OperatorMatrix {
    MomentumGrid grid;
    int components;
    Eigen::MatrixXcd mat;
    bool hermitian;
};

/// max_ij |A - A^dagger|
double hermiticity_defect(const Eigen::MatrixXcd& m);

/// H = alpha1 p + beta m, block-diagonal per mode with 2x2 blocks
/// [[m, p_k], [p_k, -m]]; per-mode eigenvalues +-sqrt(p_k^2 + m^2).
OperatorMatrix dirac_hamiltonian(const MomentumGrid& grid, double mass);

/// x = i d/dp realized as the lattice conjugation F^-1 diag(x_j) F of
/// the position-space multiplication operator; exactly hermitian and
/// diagonal on the lattice position eigenstates. Tensored with the
/// spinor identity when components = 2.
OperatorMatrix position_operator(const MomentumGrid& grid, int components = 1);

enum class TimeFunctionKind {
    dirac_linear,  // alpha1 (x) xhat + tau * beta (x) I     (two components)
    quadratic,     // xhat^2 / (2 tau), tau > 0              (one component)
};

OperatorMatrix time_function_operator(const MomentumGrid& grid, TimeFunctionKind kind,
                                      double tau);

SpinorGrid apply(const OperatorMatrix& op, const SpinorGrid& state);
Eigen::VectorXcd to_vector(const SpinorGrid& state);
SpinorGrid from_vector(const MomentumGrid& grid, const Model& model,
                       const Eigen::VectorXcd& v);

/// Exact per-mode evolution exp(-i (H - energy_offset) t): 2x2 closed
/// form for Dirac, kinetic phase for Schrodinger. Unitary to rounding.
SpinorGrid evolve(const SpinorGrid& state, double t);

/// Position-space samples psi(x_j) of a momentum-space state.
struct PositionField {
    MomentumGrid grid;
    Model model;
    std::vector<Complex> values;  // site-major, interleaved components

    int components() const { return model.components(); }
    const Complex& at(int j, int s) const { return values[j * components() + s]; }
};

PositionField to_position(const SpinorGrid& state);

/// psi^dagger psi per site.
std::vector<double> probability_density(const PositionField& field);

/// Dirac: psi^dagger alpha1 psi. Schrodinger: (1/M) Im(psi* dpsi/dx)
/// with a spectral derivative.
std::vector<double> current_density(const PositionField& field);

/// Band-limited point evaluation (x need not be a lattice site).
double density_at(const SpinorGrid& state, double x);
double current_at(const SpinorGrid& state, double x);

/// Spectral derivative of a periodic real field sampled on the position
/// lattice; the unpaired -p_max mode is dropped, as usual for odd-order
/// spectral derivatives on an even grid.
std::vector<double> spectral_derivative(const std::vector<double>& f, const MomentumGrid& grid);

struct Moments {
    double mean;
    double stddev;
};

Moments position_moments(const SpinorGrid& state);
Moments momentum_moments(const SpinorGrid& state);

/// <state| H |state> for the model's free Hamiltonian (no energy offset).
double hamiltonian_expectation(const SpinorGrid& state);

/// CSV snapshot, header "x,density,current", floats at 17 significant
/// digits.
void write_position_csv(std::ostream& os, const PositionField& field);

/// CSV snapshot, header "p,prob,phase_0[,phase_1]".
void write_momentum_csv(std::ostream& os, const SpinorGrid& state);

}  // namespace chronop::lattice
