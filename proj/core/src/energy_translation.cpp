// SPDX-License-Identifier: Apache-2.0
#include "chronop/energy_translation.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <ostream>

#include "chronop/format.hpp"

namespace chronop::energy {

namespace {

constexpr lattice::Complex kI{0.0, 1.0};

void require_hermitian(const lattice::OperatorMatrix& op) {
    if (!op.hermitian || lattice::hermiticity_defect(op.mat) > 1e-12)
        throw NonHermitianGenerator();
}

}  // namespace

std::vector<double> SpectrumReport::pairwise_differences() const {
    std::vector<double> d;
    d.reserve(eigenvalues.size() * (eigenvalues.size() - 1) / 2);
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
            d.push_back(eigenvalues[j] - eigenvalues[i]);
    return d;
}

SpectrumReport spectrum(const lattice::OperatorMatrix& op) {
    require_hermitian(op);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.mat,
                                                           Eigen::EigenvaluesOnly);
    SpectrumReport r;
    r.eigenvalues.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
    return r;
}

lattice::OperatorMatrix shift_hamiltonian(const lattice::OperatorMatrix& h, double alpha) {
    if (!h.hermitian) throw NonHermitianGenerator();
    lattice::OperatorMatrix out = h;
    out.mat -= alpha * Eigen::MatrixXcd::Identity(h.mat.rows(), h.mat.cols());
    return out;
}

void StationarySeries::validate() const {
    if (!(dt > 0)) throw std::invalid_argument("series needs dt > 0");
    if (samples.size() < 2) throw std::invalid_argument("series needs >= 2 samples");
    for (const auto& s : samples)
        if (s.size() != samples.front().size())
            throw std::invalid_argument("ragged series");
}

namespace {

// c_j with samples[j] = c_j * samples[0]; throws unless the series is a
// pure phase rotation of the first profile
std::vector<lattice::Complex> stationary_phases(const StationarySeries& series) {
    series.validate();
    const auto& base = series.samples.front();
    double base_norm2 = 0;
    for (const auto& v : base) base_norm2 += std::norm(v);
    if (base_norm2 <= 0) throw NonStationaryInput();

    std::vector<lattice::Complex> phases(series.samples.size());
    phases[0] = 1.0;
    for (std::size_t j = 1; j < series.samples.size(); ++j) {
        const auto& s = series.samples[j];
        lattice::Complex overlap = 0;
        for (std::size_t x = 0; x < s.size(); ++x)
            overlap += std::conj(base[x]) * s[x];
        const lattice::Complex c = overlap / base_norm2;
        double defect2 = 0;
        for (std::size_t x = 0; x < s.size(); ++x)
            defect2 += std::norm(s[x] - c * base[x]);
        if (std::sqrt(defect2 / base_norm2) > 1e-8) throw NonStationaryInput();
        phases[j] = c;
    }
    return phases;
}

}  // namespace

StationarySeries phase_modulate(const StationarySeries& series, double alpha) {
    stationary_phases(series);  // validates the precondition
    StationarySeries out = series;
    for (std::size_t j = 0; j < out.samples.size(); ++j) {
        const lattice::Complex ph = std::polar(1.0, alpha * out.t(j));
        for (auto& v : out.samples[j]) v *= ph;
    }
    return out;
}

double fit_frequency(const StationarySeries& series) {
    series.validate();
    lattice::Complex acc = 0;
    for (std::size_t j = 0; j + 1 < series.samples.size(); ++j) {
        const auto& a = series.samples[j];
        const auto& b = series.samples[j + 1];
        for (std::size_t x = 0; x < a.size(); ++x) acc += std::conj(a[x]) * b[x];
    }
    // psi(t) = exp(-i omega t) u  =>  <psi_j, psi_j+1> = exp(-i omega dt) |u|^2
    return -std::arg(acc) / series.dt;
}

lattice::SpinorGrid ladder_apply(const lattice::SpinorGrid& state, double alpha) {
    if (state.model.kind != lattice::ModelKind::dirac || state.model.mass != 0.0)
        throw MassiveModel();
    const double dp = state.grid.dp();
    const double steps = alpha / dp;
    const long s = std::lround(steps);
    if (std::abs(steps - static_cast<double>(s)) > 1e-9)
        throw OffLattice("alpha must be an integer multiple of dp");
    if (s == 0) return state;  // zero-step permutation

    const int n = state.grid.n;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<lattice::Complex> plus(n), minus(n);
    for (int k = 0; k < n; ++k) {
        plus[k] = (state.at(k, 0) + state.at(k, 1)) * inv_sqrt2;
        minus[k] = (state.at(k, 0) - state.at(k, 1)) * inv_sqrt2;
    }

    // exp(i alpha xhat) translates momentum support by +alpha; the
    // helicity sign selects the direction.
    auto wrap = [n](long k) { return static_cast<int>(((k % n) + n) % n); };
    lattice::SpinorGrid out(state.grid, state.model);
    for (int k = 0; k < n; ++k) {
        const lattice::Complex a = plus[wrap(k - s)];
        const lattice::Complex b = minus[wrap(k + s)];
        out.at(k, 0) = (a + b) * inv_sqrt2;
        out.at(k, 1) = (a - b) * inv_sqrt2;
    }
    return out;
}

Eigen::VectorXcd energy_propagate(const Eigen::VectorXcd& phi0,
                                  const lattice::OperatorMatrix& generator, double dE) {
    require_hermitian(generator);
    if (phi0.size() != generator.mat.rows())
        throw std::invalid_argument("state size does not match the generator");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(generator.mat);
    const Eigen::VectorXd ev = solver.eigenvalues();
    Eigen::VectorXcd y = solver.eigenvectors().adjoint() * phi0;
    for (Eigen::Index i = 0; i < y.size(); ++i)
        y(i) *= std::polar(1.0, ev(i) * dE);
    return solver.eigenvectors() * y;
}

lattice::SpinorGrid position_eigenstate(const lattice::MomentumGrid& grid, double x0) {
    const double j_real = (x0 - grid.x(0)) / grid.dx();
    const long j = std::lround(j_real);
    if (j < 0 || j >= grid.n ||
        std::abs(j_real - static_cast<double>(j)) > 1e-9)
        throw OffLattice("x0 is not a lattice site");

    lattice::SpinorGrid s(grid, lattice::Model::schrodinger(1.0));
    const double a = 1.0 / std::sqrt(grid.n * grid.dp());
    for (int k = 0; k < grid.n; ++k)
        s.at(k, 0) = a * std::polar(1.0, -grid.p(k) * x0);
    return s;
}

double orthonormality_check(const lattice::MomentumGrid& grid) {
    // <x0|x0'> depends only on the separation m = (x0' - x0)/dx
    double worst = 0;
    for (int m = 1; m < grid.n; ++m) {
        lattice::Complex acc = 0;
        for (int k = 0; k < grid.n; ++k)
            acc += std::polar(1.0, grid.p(k) * m * grid.dx());
        worst = std::max(worst, std::abs(acc) / grid.n);
    }
    return worst;
}

void write_spectrum_csv(std::ostream& os, const SpectrumReport& report) {
    os << "eigenvalue\n";
    for (double e : report.eigenvalues) os << fmt17(e) << '\n';
}

}  // namespace chronop::energy
