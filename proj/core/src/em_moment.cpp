// SPDX-License-Identifier: Apache-2.0
#include "chronop/em_moment.hpp"

#include <cmath>
#include <ostream>

#include "chronop/format.hpp"

namespace chronop::em {

PointCharge::PointCharge(double charge_, double mass_, double velocity_, double t_,
                         double x1_)
    : charge(charge_), mass(mass_), velocity(velocity_), t(t_), x1(x1_) {
    if (!(mass > 0)) throw std::invalid_argument("proper mass must be positive");
    if (!(std::abs(velocity) < 1)) throw SuperluminalBoost();
}

double PointCharge::gamma() const { return 1.0 / std::sqrt(1.0 - velocity * velocity); }

namespace {

// x^mu and p^mu of a particle, motion restricted to the x1 axis
std::array<double, 4> position4(const PointCharge& pc) { return {pc.t, pc.x1, 0, 0}; }
std::array<double, 4> momentum4(const PointCharge& pc) {
    return {pc.energy(), pc.momentum(), 0, 0};
}

template <typename Weight>
MomentTensor accumulate(std::span<const PointCharge> particles, Weight weight) {
    MomentTensor out;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu + 1; nu < 4; ++nu) {
            double s = 0;
            for (const PointCharge& pc : particles) {
                const auto x = position4(pc);
                const auto p = momentum4(pc);
                s += weight(pc) * (x[mu] * p[nu] - x[nu] * p[mu]);
            }
            out.c[mu][nu] = s;
            out.c[nu][mu] = -s;
        }
    }
    return out;
}

}  // namespace

MomentTensor angular_momentum_tensor(std::span<const PointCharge> particles) {
    return accumulate(particles, [](const PointCharge&) { return 1.0; });
}

MomentTensor electromagnetic_moment(std::span<const PointCharge> particles) {
    return accumulate(particles, [](const PointCharge& pc) {
        return pc.charge / (2.0 * pc.relativistic_mass());
    });
}

double shared_charge_ratio(std::span<const PointCharge> particles) {
    if (particles.empty()) throw std::invalid_argument("empty particle set");
    const double r0 = particles.front().charge / (2.0 * particles.front().relativistic_mass());
    for (const PointCharge& pc : particles) {
        const double r = pc.charge / (2.0 * pc.relativistic_mass());
        if (std::abs(r - r0) > 1e-12 * std::max(1.0, std::abs(r0))) throw MixedRatio();
    }
    return r0;
}

BoostMoments boost_example(double v, double t_prime, double x_prime, double m_prime,
                           double charge) {
    if (!(std::abs(v) < 1)) throw SuperluminalBoost();
    const double gamma = 1.0 / std::sqrt(1.0 - v * v);
    BoostMoments b;
    b.energy = m_prime * gamma;
    b.momentum = m_prime * v * gamma;
    b.j10 = b.energy * x_prime - t_prime * b.momentum;
    b.m10 = charge / (2.0 * m_prime) * b.j10;
    return b;
}

void write_tensor_csv(std::ostream& os, const MomentTensor& tensor,
                      const std::string& frame) {
    os << "frame=" << frame << '\n';
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            if (nu) os << ',';
            os << fmt17(tensor.c[mu][nu]);
        }
        os << '\n';
    }
}

}  // namespace chronop::em
