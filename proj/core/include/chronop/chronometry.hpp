// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chronop/lattice.hpp"

namespace chronop::chronometry {

struct ZeroMass : std::runtime_error {
    ZeroMass() : std::runtime_error("probability mass below 1e-14") {}
};
struct NotNormalized : std::runtime_error {
    explicit NotNormalized(double mass)
        : std::runtime_error("surface density mass " + std::to_string(mass) +
                             " is not 1 within 1e-6") {}
};
struct NonFiniteMean : std::runtime_error {
    NonFiniteMean() : std::runtime_error("mean-time sum does not converge") {}
};
struct NonMonotonic : std::runtime_error {
    NonMonotonic() : std::runtime_error("time-function map is not strictly monotonic") {}
};
struct OffShell : std::runtime_error {
    OffShell() : std::runtime_error("(x,p,E) violates the model dispersion relation") {}
};
struct ZeroMomentum : std::runtime_error {
    ZeroMomentum() : std::runtime_error("time function undefined at p = 0") {}
};

/// Mean-time definitions implemented side by side. eq13/eq17 weight a
/// detector time series by density/current, eq12 averages over region
/// snapshots; all three are carried with a "paper-critiqued" verdict.
/// eq14/eq16 are the time-function means ("paper-endorsed").
enum class Method { eq12, eq13, eq14, eq16, eq17 };

const char* method_name(Method m);
const char* validity_note(Method m);

struct EstimatorResult {
    Method method;
    double mean_time = 0;
    double raw_mass = 0;  // un-normalized denominator
    double window_lo = 0;
    double window_hi = 0;
    std::string validity_note;
    std::string warning;  // set e.g. when the net current is negative
};

/// Density and current sampled at a fixed detector position over a
/// uniform time window.
struct TimeSeriesAtPoint {
    double x_detect = 0;
    double t0 = 0;
    double dt = 0;
    std::vector<double> density;
    std::vector<double> current;

    double t(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
    std::size_t size() const { return density.size(); }
    void validate() const;
};

/// <t> = int t rho dt / int rho dt by composite trapezoid.
EstimatorResult presence_time_mean(const TimeSeriesAtPoint& series);

/// As presence_time_mean with the current J in place of the density.
EstimatorResult current_arrival_mean(const TimeSeriesAtPoint& series);

/// Sampled map x_k -> t(x_k) on a uniform position lattice.
struct TimeFunctionMap {
    std::vector<double> x;
    std::vector<double> t;

    double dx() const;
    void validate() const;  // sizes match, x uniform
};

/// <t> = sum t(x_k) |psi(x_k, t(x_k))|^2 dx. The surface density must
/// carry unit mass within 1e-6 unless renormalize is set; the
/// absolute-convergence proxy sum |t| rho dx must be finite.
EstimatorResult theorem1_mean(const TimeFunctionMap& tmap,
                              const std::vector<double>& surface_density,
                              bool renormalize = false);

/// Arrival-time density f_T(t) = |psi(x(t), t)|^2 |dx/dt| obtained by
/// change of variables along a strictly monotonic time-function map.
struct TimeDensity {
    std::vector<double> t;  // ascending
    std::vector<double> f;
    /// |J|-mass fraction carried by samples where the signed current is
    /// negative; 0 when no current samples were supplied.
    double negative_current_fraction = 0;

    double mass() const;  // int f dt, trapezoid
};

/// Throws NonMonotonic when t(x) has ties or reversals; the density is
/// built with |dx/dt| exactly as defined, so sign changes of the actual
/// current show up only in the diagnostic fraction.
TimeDensity theorem2_density(const TimeFunctionMap& tmap,
                             const std::vector<double>& density_along_path,
                             const std::vector<double>* current_along_path = nullptr);

/// Normalized mean of the theorem2 density; raw_mass records int f dt.
EstimatorResult theorem2_mean(const TimeDensity& density);

struct SnapshotMass {
    double t;
    double mass;  // int_Omega rho d^3x at time t
};

struct Eq12Demo {
    EstimatorResult result;
    double weight_sum;
    /// |value after duplicating the last snapshot - value|: nonzero
    /// because the weights are not a probability over t.
    double refinement_sensitivity;
};

/// Computes the region-snapshot average verbatim, together with the
/// numbers that exhibit why it is not a statistically valid mean.
Eq12Demo omega_average_demo(const std::vector<SnapshotMass>& snapshots);

struct TimePair {
    double paper_time;   // (dp/dE) x
    double razavy_time;  // (dp/dE) x - t
};

/// Free-particle time function from the phase gradient: (dp/dE) x equals
/// x E/p for the relativistic dispersion and x M/p for the quadratic
/// one. (x, p, E) must be on shell within 1e-9.
TimePair free_time_function(double x, double p, double E, const lattice::Model& model,
                            double t = 0);

/// CSV rows "method,mean_time,raw_mass,window_lo,window_hi,validity_note".
void write_report_csv(std::ostream& os, std::span<const EstimatorResult> rows);

}  // namespace chronop::chronometry
