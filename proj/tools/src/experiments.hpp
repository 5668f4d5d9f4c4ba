// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "chronop/chronometry.hpp"
#include "chronop/lattice.hpp"

namespace chronop::cli {

/// Ballistic group velocity of a packet: p0/M (Schrodinger),
/// p0/sqrt(p0^2+m^2) (Dirac), sign(p0) at m = 0.
double classical_velocity(const lattice::Model& model, double p0);

/// Density/current time series at a fixed detector, sampled by exact
/// per-mode evolution from the initial state.
chronometry::TimeSeriesAtPoint detector_series(const lattice::SpinorGrid& initial,
                                               double x_detect, double t_min,
                                               double t_max, int samples);

/// Ballistic time-function map t(x) = (x - x_ref)/velocity together with
/// the packet's density and current sampled on a uniform x window at one
/// reference snapshot. The snapshot realizes the arrival-surface density
/// |psi(x, t(x))|^2: position spread at the crossing instant, pushed
/// through the map, becomes the arrival-time spread.
struct SurfacePath {
    chronometry::TimeFunctionMap tmap;
    std::vector<double> density;
    std::vector<double> current;
};

SurfacePath sample_time_surface(const lattice::SpinorGrid& initial, double x_lo,
                                double x_hi, int samples, double velocity,
                                double x_ref, double snapshot_time);

/// int_Omega rho(x, t_j) dx over Omega = [x_lo, x_hi] for each snapshot
/// time, from full position-space densities.
std::vector<chronometry::SnapshotMass> region_snapshot_masses(
    const lattice::SpinorGrid& initial, double x_lo, double x_hi,
    const std::vector<double>& times);

struct ArrivalPipelineParams {
    double detector_x;
    double t_min, t_max;
    int detector_samples;
    double x_lo, x_hi;
    int surface_samples;
    std::vector<double> snapshot_times;
    bool renormalize = true;
};

/// One scenario, all five mean-time definitions side by side.
struct ArrivalOutputs {
    chronometry::Eq12Demo demo;
    chronometry::EstimatorResult eq12, eq13, eq14, eq16, eq17;
    double negative_current_fraction;
    double oracle_time;  // (detector_x - x0) / classical velocity
};

ArrivalOutputs run_arrival_pipeline(const lattice::SpinorGrid& initial, double x0,
                                    double p0, const ArrivalPipelineParams& params);

}  // namespace chronop::cli
