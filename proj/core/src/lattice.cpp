// SPDX-License-Identifier: Apache-2.0
#include "chronop/lattice.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "chronop/format.hpp"

namespace chronop::lattice {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

MomentumGrid::MomentumGrid(int n_, double p_max_) : n(n_), p_max(p_max_) {
    if (!power_of_two(n) || n < 8)
        throw std::invalid_argument("grid size must be a power of two >= 8");
    if (!(p_max > 0)) throw std::invalid_argument("p_max must be positive");
}

double MomentumGrid::box_length() const { return 2.0 * kPi / dp(); }

SpinorGrid::SpinorGrid(MomentumGrid g, Model m)
    : grid(g), model(m), values(static_cast<std::size_t>(g.n) * m.components()) {}

double SpinorGrid::norm_sq() const {
    double s = 0.0;
    for (const Complex& v : values) s += std::norm(v);
    return s * grid.dp();
}

bool SpinorGrid::normalized(double tol) const {
    return std::abs(norm_sq() - 1.0) <= tol;
}

void SpinorGrid::rescale_to_unit_norm() {
    const double n2 = norm_sq();
    if (n2 <= 0) throw std::invalid_argument("cannot normalize the zero state");
    const double s = 1.0 / std::sqrt(n2);
    for (Complex& v : values) v *= s;
}

namespace {

// spinor factor of the packet at momentum p
std::array<Complex, 2> dirac_spinor(double p, double m, Projection proj) {
    const double e = std::hypot(p, m);
    switch (proj) {
        case Projection::helicity_plus:
            return {Complex(1 / std::sqrt(2.0)), Complex(1 / std::sqrt(2.0))};
        case Projection::helicity_minus:
            return {Complex(1 / std::sqrt(2.0)), Complex(-1 / std::sqrt(2.0))};
        case Projection::positive_energy: {
            const double a = e + m, b = p;
            const double r = std::sqrt(a * a + b * b);
            if (r == 0) return {Complex(1), Complex(0)};  // p = m = 0 corner
            return {Complex(a / r), Complex(b / r)};
        }
        case Projection::negative_energy: {
            const double a = -p, b = e + m;
            const double r = std::sqrt(a * a + b * b);
            if (r == 0) return {Complex(0), Complex(1)};
            return {Complex(a / r), Complex(b / r)};
        }
        case Projection::none:
            throw std::invalid_argument("Dirac packets need a spinor projection");
    }
    return {Complex(1), Complex(0)};
}

}  // namespace

SpinorGrid gaussian_packet(const MomentumGrid& grid, const Model& model, double x0,
                           double p0, double sigma_p, Projection proj) {
    if (!(sigma_p > 0)) throw std::invalid_argument("sigma_p must be positive");
    if (std::abs(p0) + 4.0 * sigma_p >= grid.p_max)
        throw BandLimitViolation("packet support |p0| + 4 sigma_p exceeds p_max");
    if (model.kind == ModelKind::schrodinger && proj != Projection::none)
        throw std::invalid_argument("scalar model has no spinor projection");

    SpinorGrid s(grid, model);
    const int c = s.components();
    for (int k = 0; k < grid.n; ++k) {
        const double p = grid.p(k);
        const double g = std::exp(-(p - p0) * (p - p0) / (4.0 * sigma_p * sigma_p));
        const Complex amp = g * std::polar(1.0, -p * x0);
        if (c == 1) {
            s.at(k, 0) = amp;
        } else {
            const auto u = dirac_spinor(p, model.mass, proj);
            s.at(k, 0) = amp * u[0];
            s.at(k, 1) = amp * u[1];
        }
    }
    s.rescale_to_unit_norm();
    return s;
}

double hermiticity_defect(const Eigen::MatrixXcd& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

OperatorMatrix dirac_hamiltonian(const MomentumGrid& grid, double mass) {
    if (mass < 0) throw std::invalid_argument("mass must be >= 0");
    const int n = grid.n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        const double p = grid.p(k);
        h(2 * k, 2 * k) = mass;
        h(2 * k, 2 * k + 1) = p;
        h(2 * k + 1, 2 * k) = p;
        h(2 * k + 1, 2 * k + 1) = -mass;
    }
    return {grid, 2, std::move(h), true};
}

OperatorMatrix position_operator(const MomentumGrid& grid, int components) {
    if (components != 1 && components != 2)
        throw std::invalid_argument("components must be 1 or 2");
    const int n = grid.n;

    // Toeplitz profile g[m] = (1/n) sum_j x_j exp(-i m dp x_j); the
    // operator is F^-1 diag(x_j) F, which depends only on k - k'.
    std::vector<Complex> g(2 * n - 1);
    for (int m = -(n - 1); m <= n - 1; ++m) {
        Complex acc = 0;
        for (int j = 0; j < n; ++j) {
            const double xj = grid.x(j);
            acc += xj * std::polar(1.0, -m * grid.dp() * xj);
        }
        g[m + n - 1] = acc / static_cast<double>(n);
    }

    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        x(k, k) = g[n - 1].real();  // m = 0 entry is real
        for (int kp = 0; kp < k; ++kp) {
            const Complex v = g[(k - kp) + n - 1];
            x(k, kp) = v;
            x(kp, k) = std::conj(v);  // hermitian by construction
        }
    }

    if (components == 1) return {grid, 1, std::move(x), true};

    Eigen::MatrixXcd xs = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k)
        for (int kp = 0; kp < n; ++kp) {
            xs(2 * k, 2 * kp) = x(k, kp);
            xs(2 * k + 1, 2 * kp + 1) = x(k, kp);
        }
    return {grid, 2, std::move(xs), true};
}

OperatorMatrix time_function_operator(const MomentumGrid& grid, TimeFunctionKind kind,
                                      double tau) {
    if (kind == TimeFunctionKind::quadratic) {
        if (!(tau > 0)) throw std::invalid_argument("quadratic kind needs tau > 0");
        OperatorMatrix x = position_operator(grid, 1);
        Eigen::MatrixXcd q = (x.mat * x.mat) / (2.0 * tau);
        // symmetrize away the last-bit rounding of the product
        q = 0.5 * (q + q.adjoint()).eval();
        return {grid, 1, std::move(q), true};
    }

    const int n = grid.n;
    OperatorMatrix x = position_operator(grid, 1);
    Eigen::MatrixXcd tf = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        for (int kp = 0; kp < n; ++kp) {
            // alpha1 (x) xhat swaps the spinor components
            tf(2 * k, 2 * kp + 1) = x.mat(k, kp);
            tf(2 * k + 1, 2 * kp) = x.mat(k, kp);
        }
        tf(2 * k, 2 * k) += tau;       // + tau * beta (x) I
        tf(2 * k + 1, 2 * k + 1) -= tau;
    }
    return {grid, 2, std::move(tf), true};
}

Eigen::VectorXcd to_vector(const SpinorGrid& state) {
    Eigen::VectorXcd v(state.values.size());
    for (std::size_t i = 0; i < state.values.size(); ++i) v(i) = state.values[i];
    return v;
}

SpinorGrid from_vector(const MomentumGrid& grid, const Model& model,
                       const Eigen::VectorXcd& v) {
    SpinorGrid s(grid, model);
    if (static_cast<std::size_t>(v.size()) != s.values.size())
        throw std::invalid_argument("vector size does not match grid/model");
    for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] = v(i);
    return s;
}

SpinorGrid apply(const OperatorMatrix& op, const SpinorGrid& state) {
    if (!(op.grid == state.grid) || op.components != state.components())
        throw std::invalid_argument("operator and state live on different lattices");
    return from_vector(state.grid, state.model, op.mat * to_vector(state));
}

SpinorGrid evolve(const SpinorGrid& state, double t) {
    SpinorGrid out = state;
    const Complex offset_phase = std::polar(1.0, state.model.energy_offset * t);
    if (state.model.kind == ModelKind::schrodinger) {
        const double m = state.model.mass;
        for (int k = 0; k < state.grid.n; ++k) {
            const double p = state.grid.p(k);
            out.at(k, 0) = state.at(k, 0) * std::polar(1.0, -p * p * t / (2.0 * m)) *
                           offset_phase;
        }
        return out;
    }
    const double m = state.model.mass;
    for (int k = 0; k < state.grid.n; ++k) {
        const double p = state.grid.p(k);
        const double e = std::hypot(p, m);
        // exp(-i H t) = cos(Et) I - i sin(Et)/E H  per 2x2 mode block
        Complex u00, u01, u11;
        if (e == 0.0) {
            u00 = u11 = 1.0;
            u01 = 0.0;
        } else {
            const double cs = std::cos(e * t), sn = std::sin(e * t) / e;
            u00 = Complex(cs, -sn * m);
            u11 = Complex(cs, sn * m);
            u01 = Complex(0.0, -sn * p);
        }
        const Complex a = state.at(k, 0), b = state.at(k, 1);
        out.at(k, 0) = (u00 * a + u01 * b) * offset_phase;
        out.at(k, 1) = (u01 * a + u11 * b) * offset_phase;
    }
    return out;
}

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143268;  // 1/sqrt(2 pi)

}  // namespace

PositionField to_position(const SpinorGrid& state) {
    const int n = state.grid.n;
    const int c = state.components();
    PositionField f{state.grid, state.model,
                    std::vector<Complex>(static_cast<std::size_t>(n) * c)};
    const double w = state.grid.dp() * kInvSqrt2Pi;
    for (int j = 0; j < n; ++j) {
        const double xj = state.grid.x(j);
        for (int s = 0; s < c; ++s) {
            Complex acc = 0;
            for (int k = 0; k < n; ++k)
                acc += state.at(k, s) * std::polar(1.0, state.grid.p(k) * xj);
            f.values[j * c + s] = w * acc;
        }
    }
    return f;
}

std::vector<double> probability_density(const PositionField& field) {
    const int n = field.grid.n, c = field.components();
    std::vector<double> rho(n);
    for (int j = 0; j < n; ++j) {
        double d = 0;
        for (int s = 0; s < c; ++s) d += std::norm(field.at(j, s));
        rho[j] = d;
    }
    return rho;
}

namespace {

// psi(x_j) -> phi_k (inverse of the to_position sum)
std::vector<Complex> x_to_p(const std::vector<Complex>& psi, const MomentumGrid& grid) {
    const int n = grid.n;
    std::vector<Complex> phi(n);
    const double w = grid.dx() * kInvSqrt2Pi;
    for (int k = 0; k < n; ++k) {
        Complex acc = 0;
        for (int j = 0; j < n; ++j)
            acc += psi[j] * std::polar(1.0, -grid.p(k) * grid.x(j));
        phi[k] = w * acc;
    }
    return phi;
}

std::vector<Complex> p_to_x(const std::vector<Complex>& phi, const MomentumGrid& grid) {
    const int n = grid.n;
    std::vector<Complex> psi(n);
    const double w = grid.dp() * kInvSqrt2Pi;
    for (int j = 0; j < n; ++j) {
        Complex acc = 0;
        for (int k = 0; k < n; ++k)
            acc += phi[k] * std::polar(1.0, grid.p(k) * grid.x(j));
        psi[j] = w * acc;
    }
    return psi;
}

}  // namespace

std::vector<double> current_density(const PositionField& field) {
    const int n = field.grid.n;
    std::vector<double> j(n);
    if (field.model.kind == ModelKind::dirac) {
        for (int i = 0; i < n; ++i) {
            // psi^dagger alpha1 psi = 2 Re(conj(psi_0) psi_1)
            j[i] = 2.0 * std::real(std::conj(field.at(i, 0)) * field.at(i, 1));
        }
        return j;
    }
    std::vector<Complex> psi(field.values.begin(), field.values.end());
    std::vector<Complex> phi = x_to_p(psi, field.grid);
    for (int k = 0; k < field.grid.n; ++k) phi[k] *= kI * field.grid.p(k);
    phi[0] = 0;  // unpaired -p_max mode
    const std::vector<Complex> dpsi = p_to_x(phi, field.grid);
    for (int i = 0; i < n; ++i)
        j[i] = std::imag(std::conj(psi[i]) * dpsi[i]) / field.model.mass;
    return j;
}

namespace {

// psi and dpsi/dx at an arbitrary point
void point_eval(const SpinorGrid& state, double x, std::array<Complex, 2>& psi,
                std::array<Complex, 2>& dpsi) {
    const int c = state.components();
    const double w = state.grid.dp() * kInvSqrt2Pi;
    psi = {Complex(0), Complex(0)};
    dpsi = {Complex(0), Complex(0)};
    for (int k = 0; k < state.grid.n; ++k) {
        const double p = state.grid.p(k);
        const Complex ph = std::polar(1.0, p * x);
        for (int s = 0; s < c; ++s) {
            const Complex v = state.at(k, s) * ph;
            psi[s] += v;
            dpsi[s] += kI * p * v;
        }
    }
    for (int s = 0; s < c; ++s) {
        psi[s] *= w;
        dpsi[s] *= w;
    }
}

}  // namespace

double density_at(const SpinorGrid& state, double x) {
    std::array<Complex, 2> psi, dpsi;
    point_eval(state, x, psi, dpsi);
    double d = std::norm(psi[0]);
    if (state.components() == 2) d += std::norm(psi[1]);
    return d;
}

double current_at(const SpinorGrid& state, double x) {
    std::array<Complex, 2> psi, dpsi;
    point_eval(state, x, psi, dpsi);
    if (state.model.kind == ModelKind::dirac)
        return 2.0 * std::real(std::conj(psi[0]) * psi[1]);
    return std::imag(std::conj(psi[0]) * dpsi[0]) / state.model.mass;
}

std::vector<double> spectral_derivative(const std::vector<double>& f,
                                        const MomentumGrid& grid) {
    if (static_cast<int>(f.size()) != grid.n)
        throw std::invalid_argument("field size does not match lattice");
    std::vector<Complex> cf(f.begin(), f.end());
    std::vector<Complex> ck = x_to_p(cf, grid);
    for (int k = 0; k < grid.n; ++k) ck[k] *= kI * grid.p(k);
    ck[0] = 0;
    const std::vector<Complex> d = p_to_x(ck, grid);
    std::vector<double> out(grid.n);
    for (int j = 0; j < grid.n; ++j) out[j] = d[j].real();
    return out;
}

Moments position_moments(const SpinorGrid& state) {
    const PositionField f = to_position(state);
    const std::vector<double> rho = probability_density(f);
    const double dx = state.grid.dx();
    double mass = 0, m1 = 0, m2 = 0;
    for (int j = 0; j < state.grid.n; ++j) {
        const double xj = state.grid.x(j);
        mass += rho[j] * dx;
        m1 += xj * rho[j] * dx;
        m2 += xj * xj * rho[j] * dx;
    }
    const double mean = m1 / mass;
    return {mean, std::sqrt(std::max(0.0, m2 / mass - mean * mean))};
}

Moments momentum_moments(const SpinorGrid& state) {
    const double dp = state.grid.dp();
    const int c = state.components();
    double mass = 0, m1 = 0, m2 = 0;
    for (int k = 0; k < state.grid.n; ++k) {
        double w = 0;
        for (int s = 0; s < c; ++s) w += std::norm(state.at(k, s));
        const double p = state.grid.p(k);
        mass += w * dp;
        m1 += p * w * dp;
        m2 += p * p * w * dp;
    }
    const double mean = m1 / mass;
    return {mean, std::sqrt(std::max(0.0, m2 / mass - mean * mean))};
}

double hamiltonian_expectation(const SpinorGrid& state) {
    const double dp = state.grid.dp();
    double acc = 0;
    if (state.model.kind == ModelKind::schrodinger) {
        for (int k = 0; k < state.grid.n; ++k) {
            const double p = state.grid.p(k);
            acc += std::norm(state.at(k, 0)) * p * p / (2.0 * state.model.mass);
        }
        return acc * dp;
    }
    const double m = state.model.mass;
    for (int k = 0; k < state.grid.n; ++k) {
        const double p = state.grid.p(k);
        const Complex a = state.at(k, 0), b = state.at(k, 1);
        // phi^dagger [[m, p], [p, -m]] phi
        acc += m * (std::norm(a) - std::norm(b)) +
               2.0 * p * std::real(std::conj(a) * b);
    }
    return acc * dp;
}

void write_position_csv(std::ostream& os, const PositionField& field) {
    const std::vector<double> rho = probability_density(field);
    const std::vector<double> cur = current_density(field);
    os << "x,density,current\n";
    for (int j = 0; j < field.grid.n; ++j)
        os << fmt17(field.grid.x(j)) << ',' << fmt17(rho[j]) << ',' << fmt17(cur[j])
           << '\n';
}

void write_momentum_csv(std::ostream& os, const SpinorGrid& state) {
    const int c = state.components();
    os << (c == 2 ? "p,prob,phase_0,phase_1" : "p,prob,phase_0") << '\n';
    for (int k = 0; k < state.grid.n; ++k) {
        double w = 0;
        for (int s = 0; s < c; ++s) w += std::norm(state.at(k, s));
        os << fmt17(state.grid.p(k)) << ',' << fmt17(w) << ','
           << fmt17(std::arg(state.at(k, 0)));
        if (c == 2) os << ',' << fmt17(std::arg(state.at(k, 1)));
        os << '\n';
    }
}

}  // namespace chronop::lattice
