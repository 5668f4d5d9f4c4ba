// SPDX-License-Identifier: Apache-2.0
#include "experiments.hpp"

#include <cmath>
#include <stdexcept>

namespace chronop::cli {

double classical_velocity(const lattice::Model& model, double p0) {
    if (model.kind == lattice::ModelKind::schrodinger) return p0 / model.mass;
    if (model.mass == 0.0) return p0 >= 0 ? 1.0 : -1.0;
    return p0 / std::hypot(p0, model.mass);
}

chronometry::TimeSeriesAtPoint detector_series(const lattice::SpinorGrid& initial,
                                               double x_detect, double t_min,
                                               double t_max, int samples) {
    if (samples < 2) throw std::invalid_argument("detector needs >= 2 samples");
    if (!(t_max > t_min)) throw std::invalid_argument("detector needs t_max > t_min");
    chronometry::TimeSeriesAtPoint series;
    series.x_detect = x_detect;
    series.t0 = t_min;
    series.dt = (t_max - t_min) / (samples - 1);
    series.density.resize(samples);
    series.current.resize(samples);
    for (int i = 0; i < samples; ++i) {
        const lattice::SpinorGrid st = lattice::evolve(initial, series.t(i));
        series.density[i] = lattice::density_at(st, x_detect);
        series.current[i] = lattice::current_at(st, x_detect);
    }
    return series;
}

SurfacePath sample_time_surface(const lattice::SpinorGrid& initial, double x_lo,
                                double x_hi, int samples, double velocity,
                                double x_ref, double snapshot_time) {
    if (samples < 2) throw std::invalid_argument("surface needs >= 2 samples");
    if (!(x_hi > x_lo)) throw std::invalid_argument("surface needs x_hi > x_lo");
    if (velocity == 0.0) throw std::invalid_argument("surface needs nonzero velocity");
    SurfacePath sp;
    const double dx = (x_hi - x_lo) / (samples - 1);
    sp.tmap.x.resize(samples);
    sp.tmap.t.resize(samples);
    sp.density.resize(samples);
    sp.current.resize(samples);
    const lattice::SpinorGrid st = lattice::evolve(initial, snapshot_time);
    for (int k = 0; k < samples; ++k) {
        const double x = x_lo + k * dx;
        sp.tmap.x[k] = x;
        sp.tmap.t[k] = (x - x_ref) / velocity;
        sp.density[k] = lattice::density_at(st, x);
        sp.current[k] = lattice::current_at(st, x);
    }
    return sp;
}

std::vector<chronometry::SnapshotMass> region_snapshot_masses(
    const lattice::SpinorGrid& initial, double x_lo, double x_hi,
    const std::vector<double>& times) {
    std::vector<chronometry::SnapshotMass> out;
    out.reserve(times.size());
    const double dx = initial.grid.dx();
    for (double t : times) {
        const lattice::PositionField f = lattice::to_position(lattice::evolve(initial, t));
        const std::vector<double> rho = lattice::probability_density(f);
        double mass = 0;
        for (int j = 0; j < initial.grid.n; ++j) {
            const double x = initial.grid.x(j);
            if (x >= x_lo && x <= x_hi) mass += rho[j] * dx;
        }
        out.push_back({t, mass});
    }
    return out;
}

ArrivalOutputs run_arrival_pipeline(const lattice::SpinorGrid& initial, double x0,
                                    double p0, const ArrivalPipelineParams& params) {
    ArrivalOutputs out;
    const double v = classical_velocity(initial.model, p0);
    out.oracle_time = (params.detector_x - x0) / v;

    const auto series = detector_series(initial, params.detector_x, params.t_min,
                                        params.t_max, params.detector_samples);
    out.eq13 = chronometry::presence_time_mean(series);
    out.eq17 = chronometry::current_arrival_mean(series);

    // arrival surface sampled when the classical trajectory crosses the
    // detector; the map then converts position spread to time spread
    const SurfacePath sp = sample_time_surface(initial, params.x_lo, params.x_hi,
                                               params.surface_samples, v, x0,
                                               out.oracle_time);
    out.eq14 = chronometry::theorem1_mean(sp.tmap, sp.density, params.renormalize);
    const chronometry::TimeDensity ft =
        chronometry::theorem2_density(sp.tmap, sp.density, &sp.current);
    out.eq16 = chronometry::theorem2_mean(ft);
    out.negative_current_fraction = ft.negative_current_fraction;

    const auto masses = region_snapshot_masses(initial, params.x_lo, params.x_hi,
                                               params.snapshot_times);
    out.demo = chronometry::omega_average_demo(masses);
    out.eq12 = out.demo.result;
    return out;
}

}  // namespace chronop::cli
