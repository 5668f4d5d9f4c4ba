// SPDX-License-Identifier: Apache-2.0
#include "chronop/chronometry.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "chronop/format.hpp"

namespace chronop::chronometry {

namespace {

constexpr double kZeroMassTol = 1e-14;

// composite trapezoid of f against uniform spacing dt
double trapezoid_uniform(const std::vector<double>& f, double dt) {
    double s = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
    return s * dt;
}

// trapezoid over a non-uniform ascending abscissa
double trapezoid(const std::vector<double>& x, const std::vector<double>& f) {
    double s = 0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        s += 0.5 * (f[i] + f[i + 1]) * (x[i + 1] - x[i]);
    return s;
}

EstimatorResult weighted_series_mean(const TimeSeriesAtPoint& series, Method method,
                                     const std::vector<double>& weight) {
    series.validate();
    std::vector<double> tw(weight.size());
    for (std::size_t i = 0; i < weight.size(); ++i) tw[i] = series.t(i) * weight[i];
    const double mass = trapezoid_uniform(weight, series.dt);
    if (std::abs(mass) <= kZeroMassTol) throw ZeroMass();
    EstimatorResult r;
    r.method = method;
    r.mean_time = trapezoid_uniform(tw, series.dt) / mass;
    r.raw_mass = mass;
    r.window_lo = series.t0;
    r.window_hi = series.t(series.size() - 1);
    r.validity_note = validity_note(method);
    if (mass < 0) r.warning = "negative net mass (left-mover dominated)";
    return r;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::eq12: return "eq12";
        case Method::eq13: return "eq13";
        case Method::eq14: return "eq14";
        case Method::eq16: return "eq16";
        case Method::eq17: return "eq17";
    }
    return "?";
}

const char* validity_note(Method m) {
    switch (m) {
        case Method::eq14:
        case Method::eq16: return "paper-endorsed";
        default: return "paper-critiqued";
    }
}

void TimeSeriesAtPoint::validate() const {
    if (!(dt > 0)) throw std::invalid_argument("series needs dt > 0");
    if (density.size() < 2 || density.size() != current.size())
        throw std::invalid_argument("series needs >= 2 matched samples");
}

EstimatorResult presence_time_mean(const TimeSeriesAtPoint& series) {
    return weighted_series_mean(series, Method::eq13, series.density);
}

EstimatorResult current_arrival_mean(const TimeSeriesAtPoint& series) {
    return weighted_series_mean(series, Method::eq17, series.current);
}

double TimeFunctionMap::dx() const {
    if (x.size() < 2) throw std::invalid_argument("map needs >= 2 samples");
    return x[1] - x[0];
}

void TimeFunctionMap::validate() const {
    if (x.size() < 2 || x.size() != t.size())
        throw std::invalid_argument("map needs matched x/t samples");
    const double d = dx();
    if (!(d > 0)) throw std::invalid_argument("x lattice must ascend");
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (std::abs((x[i + 1] - x[i]) - d) > 1e-9 * std::max(1.0, std::abs(d)))
            throw std::invalid_argument("x lattice must be uniform");
}

EstimatorResult theorem1_mean(const TimeFunctionMap& tmap,
                              const std::vector<double>& surface_density,
                              bool renormalize) {
    tmap.validate();
    if (surface_density.size() != tmap.x.size())
        throw std::invalid_argument("density samples do not match the map");
    const double dx = tmap.dx();
    double mass = 0, num = 0, abs_num = 0;
    for (std::size_t k = 0; k < surface_density.size(); ++k) {
        mass += surface_density[k] * dx;
        num += tmap.t[k] * surface_density[k] * dx;
        abs_num += std::abs(tmap.t[k]) * surface_density[k] * dx;
    }
    if (!std::isfinite(abs_num) || !std::isfinite(num)) throw NonFiniteMean();
    if (!renormalize && std::abs(mass - 1.0) > 1e-6) throw NotNormalized(mass);
    if (std::abs(mass) <= kZeroMassTol) throw ZeroMass();

    EstimatorResult r;
    r.method = Method::eq14;
    r.mean_time = renormalize ? num / mass : num;
    r.raw_mass = mass;
    const auto [lo, hi] = std::minmax_element(tmap.t.begin(), tmap.t.end());
    r.window_lo = *lo;
    r.window_hi = *hi;
    r.validity_note = validity_note(Method::eq14);
    return r;
}

TimeDensity theorem2_density(const TimeFunctionMap& tmap,
                             const std::vector<double>& density_along_path,
                             const std::vector<double>* current_along_path) {
    tmap.validate();
    const std::size_t n = tmap.x.size();
    if (density_along_path.size() != n)
        throw std::invalid_argument("density samples do not match the map");
    if (current_along_path && current_along_path->size() != n)
        throw std::invalid_argument("current samples do not match the map");

    const bool increasing = tmap.t[1] > tmap.t[0];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = tmap.t[i + 1] - tmap.t[i];
        if ((increasing && d <= 0) || (!increasing && d >= 0)) throw NonMonotonic();
    }

    const double dx = tmap.dx();
    TimeDensity out;
    out.t.resize(n);
    out.f.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double dtdx;
        if (i == 0) dtdx = (tmap.t[1] - tmap.t[0]) / dx;
        else if (i + 1 == n) dtdx = (tmap.t[n - 1] - tmap.t[n - 2]) / dx;
        else dtdx = (tmap.t[i + 1] - tmap.t[i - 1]) / (2.0 * dx);
        out.t[i] = tmap.t[i];
        out.f[i] = density_along_path[i] / std::abs(dtdx);
    }
    if (!increasing) {
        std::reverse(out.t.begin(), out.t.end());
        std::reverse(out.f.begin(), out.f.end());
    }
    if (current_along_path) {
        double neg = 0, tot = 0;
        for (double j : *current_along_path) {
            tot += std::abs(j);
            if (j < 0) neg += std::abs(j);
        }
        out.negative_current_fraction = tot > 0 ? neg / tot : 0.0;
    }
    return out;
}

double TimeDensity::mass() const { return trapezoid(t, f); }

EstimatorResult theorem2_mean(const TimeDensity& density) {
    if (density.t.size() < 2 || density.t.size() != density.f.size())
        throw std::invalid_argument("density needs >= 2 matched samples");
    std::vector<double> tf(density.t.size());
    for (std::size_t i = 0; i < tf.size(); ++i) tf[i] = density.t[i] * density.f[i];
    const double mass = density.mass();
    if (std::abs(mass) <= kZeroMassTol) throw ZeroMass();

    EstimatorResult r;
    r.method = Method::eq16;
    r.mean_time = trapezoid(density.t, tf) / mass;
    r.raw_mass = mass;
    r.window_lo = density.t.front();
    r.window_hi = density.t.back();
    r.validity_note = validity_note(Method::eq16);
    return r;
}

namespace {

double eq12_value(const std::vector<SnapshotMass>& snapshots) {
    double num = 0, den = 0;
    for (const auto& s : snapshots) {
        num += s.t * s.mass;
        den += s.mass;
    }
    if (std::abs(den) <= kZeroMassTol) throw ZeroMass();
    return num / den;
}

}  // namespace

Eq12Demo omega_average_demo(const std::vector<SnapshotMass>& snapshots) {
    if (snapshots.empty()) throw std::invalid_argument("need at least one snapshot");

    Eq12Demo demo;
    double weight_sum = 0;
    double lo = snapshots.front().t, hi = snapshots.front().t;
    for (const auto& s : snapshots) {
        weight_sum += s.mass;
        lo = std::min(lo, s.t);
        hi = std::max(hi, s.t);
    }
    const double value = eq12_value(snapshots);

    std::vector<SnapshotMass> refined = snapshots;
    refined.push_back(snapshots.back());
    demo.refinement_sensitivity = std::abs(eq12_value(refined) - value);
    demo.weight_sum = weight_sum;

    demo.result.method = Method::eq12;
    demo.result.mean_time = value;
    demo.result.raw_mass = weight_sum;
    demo.result.window_lo = lo;
    demo.result.window_hi = hi;
    demo.result.validity_note = validity_note(Method::eq12);
    return demo;
}

TimePair free_time_function(double x, double p, double E, const lattice::Model& model,
                            double t) {
    if (std::abs(p) <= 1e-300) throw ZeroMomentum();
    double paper_time;
    if (model.kind == lattice::ModelKind::dirac) {
        if (std::abs(E * E - (p * p + model.mass * model.mass)) > 1e-9) throw OffShell();
        paper_time = x * E / p;
    } else {
        if (std::abs(E - p * p / (2.0 * model.mass)) > 1e-9) throw OffShell();
        paper_time = x * model.mass / p;
    }
    return {paper_time, paper_time - t};
}

void write_report_csv(std::ostream& os, std::span<const EstimatorResult> rows) {
    os << "method,mean_time,raw_mass,window_lo,window_hi,validity_note\n";
    for (const auto& r : rows)
        os << method_name(r.method) << ',' << fmt17(r.mean_time) << ','
           << fmt17(r.raw_mass) << ',' << fmt17(r.window_lo) << ','
           << fmt17(r.window_hi) << ',' << r.validity_note << '\n';
}

}  // namespace chronop::chronometry
