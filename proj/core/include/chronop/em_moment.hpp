// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chronop::em {

struct MixedRatio : std::runtime_error {
    MixedRatio()
        : std::runtime_error(
              "particles do not share one charge-to-relativistic-mass ratio") {}
};
struct SuperluminalBoost : std::runtime_error {
    SuperluminalBoost() : std::runtime_error("|v| must be < 1") {}
};

/// Point charge moving along the x1 axis, natural units. Relativistic
/// mass, energy and momentum are always derived from (mass, velocity),
/// never stored.
struct PointCharge {
    double charge;
    double mass;      // proper mass, > 0
    double velocity;  // |v| < 1
    double t;
    double x1;

    PointCharge(double charge, double mass, double velocity, double t, double x1);

    double gamma() const;
    double relativistic_mass() const { return mass * gamma(); }
    double energy() const { return relativistic_mass(); }
    double momentum() const { return relativistic_mass() * velocity; }
};

/// Antisymmetric 4x4 tensor; the builders fill the upper triangle and
/// mirror it, so c[mu][nu] == -c[nu][mu] holds bit-exactly.
struct MomentTensor {
    std::array<std::array<double, 4>, 4> c{};

    double at(int mu, int nu) const { return c[mu][nu]; }
};

/// J^{mu nu} = sum_n (x^mu p^nu - x^nu p^mu) with p = (m', m'v, 0, 0)
/// and x = (t, x1, 0, 0). The 1-0 component is the energy moment
/// m'x^1 - t p^1.
MomentTensor angular_momentum_tensor(std::span<const PointCharge> particles);

/// M^{mu nu} = sum_n (e/2m') J^{mu nu}_n.
MomentTensor electromagnetic_moment(std::span<const PointCharge> particles);

/// Common e/(2m') of the particle set, for the proportionality check
/// M = ratio * J. Throws MixedRatio when the ratios differ beyond
/// 1e-12 relative.
double shared_charge_ratio(std::span<const PointCharge> particles);

struct BoostMoments {
    double energy;    // E' = m'/sqrt(1-v^2)
    double momentum;  // p' = m'v/sqrt(1-v^2)
    double j10;       // E'x'^1 - t'p'^1
    double m10;       // (e/2m') j10
};

/// Moments of one particle as seen from a frame moving with velocity -v,
/// evaluated from the printed closed forms.
BoostMoments boost_example(double v, double t_prime, double x_prime, double m_prime,
                           double charge);

/// 4x4 CSV block preceded by a "frame=<name>" line.
void write_tensor_csv(std::ostream& os, const MomentTensor& tensor,
                      const std::string& frame);

}  // namespace chronop::em
