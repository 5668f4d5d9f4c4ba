// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "chronop/chronometry.hpp"
#include "chronop/em_moment.hpp"
#include "chronop/energy_translation.hpp"
#include "chronop/format.hpp"
#include "chronop/lattice.hpp"
#include "chronop/opcalc.hpp"
#include "chronop/opcalc_parser.hpp"
#include "experiments.hpp"

namespace chronop::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// output plumbing

class OutputWriter {
  public:
    explicit OutputWriter(std::string dir) : dir_(std::move(dir)) {}

    void write(const std::string& name, const std::string& content) {
        fs::create_directories(dir_);
        const fs::path final_path = fs::path(dir_) / name;
        const fs::path tmp_path = final_path.string() + ".tmp";
        {
            std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write " + tmp_path.string());
            out << content;
        }
        fs::rename(tmp_path, final_path);
        files_.push_back(name);
    }

    const std::vector<std::string>& files() const { return files_; }

  private:
    std::string dir_;
    std::vector<std::string> files_;
};

json estimator_json(const chronometry::EstimatorResult& r) {
    json j;
    j["method"] = chronometry::method_name(r.method);
    j["mean_time"] = r.mean_time;
    j["raw_mass"] = r.raw_mass;
    j["window"] = {r.window_lo, r.window_hi};
    j["validity_note"] = r.validity_note;
    if (!r.warning.empty()) j["warning"] = r.warning;
    return j;
}

void finish_summary(OutputWriter& out, json& summary, bool pass) {
    summary["pass"] = pass;
    summary["outputs"] = out.files();
    out.write("summary.json", summary.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// shared config fragments

const std::vector<KeySpec> kGridKeys = {
    {"grid.n", KeyKind::int_, true},
    {"grid.p_max", KeyKind::double_, true},
};

const std::vector<KeySpec> kModelKeys = {
    {"model.kind", KeyKind::string_, true},
    {"model.mass", KeyKind::double_, true},
    {"model.energy_offset", KeyKind::double_, false},
};

const std::vector<KeySpec> kPacketKeys = {
    {"packet.x0", KeyKind::double_, true},
    {"packet.p0", KeyKind::double_, true},
    {"packet.sigma_p", KeyKind::double_, true},
    {"packet.projection", KeyKind::string_, false},
};

std::vector<KeySpec> concat(std::initializer_list<std::vector<KeySpec>> parts) {
    std::vector<KeySpec> all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return all;
}

lattice::MomentumGrid grid_from(const Config& cfg) {
    return {static_cast<int>(cfg.get_int("grid.n")), cfg.get_double("grid.p_max")};
}

lattice::Model model_from(const Config& cfg) {
    const std::string kind = cfg.get_string("model.kind");
    const double mass = cfg.get_double("model.mass");
    const double offset = cfg.get_double_or("model.energy_offset", 0.0);
    if (kind == "dirac") return lattice::Model::dirac(mass, offset);
    if (kind == "schrodinger") return lattice::Model::schrodinger(mass, offset);
    throw ConfigError("model.kind must be dirac or schrodinger");
}

lattice::Projection projection_from(const Config& cfg) {
    const std::string p = cfg.get_string_or("packet.projection", "none");
    if (p == "none") return lattice::Projection::none;
    if (p == "positive_energy") return lattice::Projection::positive_energy;
    if (p == "negative_energy") return lattice::Projection::negative_energy;
    if (p == "helicity_plus") return lattice::Projection::helicity_plus;
    if (p == "helicity_minus") return lattice::Projection::helicity_minus;
    throw ConfigError("unknown packet.projection: " + p);
}

lattice::SpinorGrid packet_from(const Config& cfg, const lattice::Model& model) {
    return lattice::gaussian_packet(grid_from(cfg), model, cfg.get_double("packet.x0"),
                                    cfg.get_double("packet.p0"),
                                    cfg.get_double("packet.sigma_p"),
                                    projection_from(cfg));
}

// ---------------------------------------------------------------------------
// verify-algebra

using opcalc::Gen;
using opcalc::OperatorExpression;
using opcalc::parse_expression;

OperatorExpression raw_heisenberg(const OperatorExpression& a) {
    const auto h = OperatorExpression::generator(Gen::H);
    return opcalc::partial_t(a) + ExactComplex::i() * (h * a - a * h);
}

struct PropertyCounts {
    int samples = 0;
    int leibniz_failures = 0;
    int jacobi_failures = 0;
    int linearity_failures = 0;
};

OperatorExpression random_expression(std::mt19937_64& rng, int max_len) {
    static const Gen pool[] = {Gen::t, Gen::x1, Gen::p1, Gen::alpha1, Gen::beta};
    static const ExactComplex coeffs[] = {
        ExactComplex(1), ExactComplex(-1), ExactComplex(Rational(1, 2)),
        ExactComplex::i(), ExactComplex(Rational(0), Rational(-1, 2))};
    std::uniform_int_distribution<int> n_terms(1, 2);
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick_gen(0, 4);
    std::uniform_int_distribution<int> pick_coeff(0, 4);
    OperatorExpression e;
    const int terms = n_terms(rng);
    for (int i = 0; i < terms; ++i) {
        opcalc::Word w;
        const int l = len(rng);
        for (int j = 0; j < l; ++j) w.push_back(pool[pick_gen(rng)]);
        e += OperatorExpression::word(w, coeffs[pick_coeff(rng)]);
    }
    return e;
}

PropertyCounts property_sweep(int samples, std::uint64_t seed) {
    const auto rules = opcalc::RuleSet::canonical();
    std::mt19937_64 rng(seed);
    PropertyCounts counts;
    counts.samples = samples;
    for (int it = 0; it < samples; ++it) {
        const auto a2 = random_expression(rng, 2);
        const auto b2 = random_expression(rng, 2);
        const auto c2 = random_expression(rng, 2);
        // product-rule law for the bracket
        const auto lhs = opcalc::commutator(a2 * b2, c2, rules);
        const auto expand = opcalc::normalize(
            a2 * (b2 * c2 - c2 * b2) + (a2 * c2 - c2 * a2) * b2, rules);
        if (!(lhs == expand)) ++counts.leibniz_failures;

        const auto a3 = random_expression(rng, 3);
        const auto b3 = random_expression(rng, 3);
        const auto c3 = random_expression(rng, 3);
        auto br = [&](const OperatorExpression& x, const OperatorExpression& y) {
            return x * y - y * x;
        };
        const auto jac = opcalc::normalize(
            br(br(a3, b3), c3) + br(br(b3, c3), a3) + br(br(c3, a3), b3), rules);
        if (!jac.is_zero()) ++counts.jacobi_failures;

        const auto na = opcalc::normalize(a3, rules);
        const auto nb = opcalc::normalize(b3, rules);
        if (!(opcalc::normalize(a3 + b3, rules) == na + nb) ||
            !(opcalc::normalize(na, rules) == na))
            ++counts.linearity_failures;
    }
    return counts;
}

int cmd_verify_algebra(const Config& cfg, OutputWriter& out, std::uint64_t seed) {
    validate_config(cfg, {
                             {"algebra.mass", KeyKind::rational_, false},
                             {"algebra.tau", KeyKind::rational_, false},
                             {"algebra.property_samples", KeyKind::int_, false},
                         });
    const Rational mass = cfg.get_rational_or("algebra.mass", Rational(3, 2));
    const Rational tau = cfg.get_rational_or("algebra.tau", Rational(1));
    const int samples = static_cast<int>(cfg.get_int_or("algebra.property_samples", 64));

    const auto concrete = opcalc::RuleSet::concrete_dirac(mass);
    const auto abstract_rules = opcalc::RuleSet::abstract_conjugate();
    const auto canonical = opcalc::RuleSet::canonical();
    const auto p1 = OperatorExpression::generator(Gen::p1);

    std::vector<std::pair<std::string, opcalc::ProofLedger>> ledgers;
    ledgers.emplace_back("anticommutation_h_alpha",
                         opcalc::prove_zero("anticommutator {H,alpha1} - 2*p1",
                                            parse_expression("{H,alpha1} - 2*p1"),
                                            concrete));
    ledgers.emplace_back(
        "commutation_h_xh",
        opcalc::prove_zero("[H,-x1*H] - i*alpha1*H",
                           parse_expression("[H,-x1*H] - i*alpha1*H"), concrete));
    ledgers.emplace_back(
        "commutation_h_spin",
        opcalc::prove_zero("[H,S01] - (i*H*alpha1 - i*p1), S01 = i/2*alpha1",
                           parse_expression("[H, i/2*alpha1] - (i*H*alpha1 - i*p1)"),
                           concrete));

    const auto j01 = parse_expression("t*p1 - x1*H + i/2*alpha1");
    const auto tp1 = parse_expression("t*p1");
    ledgers.emplace_back(
        "conservation_reduction",
        opcalc::prove_zero("dJ01/dt minus its time-route reduction",
                           raw_heisenberg(j01) - raw_heisenberg(tp1) + p1, concrete));

    ledgers.emplace_back("conservation_time_route",
                         opcalc::prove_zero("dJ01/dt via the time coordinate",
                                            raw_heisenberg(tp1) - p1, concrete));
    ledgers.emplace_back(
        "conservation_time_function_route",
        opcalc::prove_zero("dJ01/dt via the opaque time function",
                           raw_heisenberg(parse_expression("T*p1")) - p1,
                           abstract_rules));
    ledgers.emplace_back(
        "time_function_conjugation",
        opcalc::prove_zero("[alpha1*x1, alpha1*p1] - i",
                           parse_expression("[alpha1*x1, alpha1*p1] - i*unit"),
                           canonical));
    ledgers.emplace_back("time_squared_linearization",
                         opcalc::square_identity_check(tau));

    // the two time-coordinate facts share one ledger file
    const auto fact1 = opcalc::prove_zero(
        "dt/dt - 1", opcalc::partial_t(parse_expression("t")) - parse_expression("unit"),
        concrete);
    const auto fact2 =
        opcalc::prove_zero("[H,t]", parse_expression("[H,t]"), concrete);

    json summary;
    summary["command"] = "verify-algebra";
    summary["parameters"] = {{"mass", mass.get_str()},
                             {"tau", tau.get_str()},
                             {"property_samples", samples},
                             {"seed", seed}};
    bool all_verified = fact1.verified && fact2.verified;
    json ledger_json;
    for (const auto& [name, ledger] : ledgers) {
        out.write(name + ".ledger.txt", ledger.report());
        ledger_json[name] = ledger.verified ? "VERIFIED" : "RESIDUAL";
        all_verified = all_verified && ledger.verified;
    }
    out.write("time_coordinate_facts.ledger.txt", fact1.report() + fact2.report());
    ledger_json["time_coordinate_facts"] =
        fact1.verified && fact2.verified ? "VERIFIED" : "RESIDUAL";
    summary["ledgers"] = ledger_json;

    const PropertyCounts counts = property_sweep(samples, seed);
    summary["property_checks"] = {{"samples", counts.samples},
                                  {"leibniz_failures", counts.leibniz_failures},
                                  {"jacobi_failures", counts.jacobi_failures},
                                  {"linearity_failures", counts.linearity_failures}};
    const bool props_ok = counts.leibniz_failures == 0 && counts.jacobi_failures == 0 &&
                          counts.linearity_failures == 0;

    finish_summary(out, summary, all_verified && props_ok);
    return all_verified && props_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// evolve

int cmd_evolve(const Config& cfg, OutputWriter& out) {
    validate_config(cfg, concat({kGridKeys, kModelKeys, kPacketKeys,
                                 {
                                     {"run.t_final", KeyKind::double_, true},
                                     {"run.snapshots", KeyKind::int_, false},
                                     {"run.space", KeyKind::string_, false},
                                 }}));
    const lattice::Model model = model_from(cfg);
    const lattice::SpinorGrid initial = packet_from(cfg, model);
    const double t_final = cfg.get_double("run.t_final");
    const int snapshots = static_cast<int>(cfg.get_int_or("run.snapshots", 5));
    const std::string space = cfg.get_string_or("run.space", "position");
    if (space != "position" && space != "momentum")
        throw ConfigError("run.space must be position or momentum");
    if (snapshots < 1) throw ConfigError("run.snapshots must be >= 1");

    json summary;
    summary["command"] = "evolve";
    summary["parameters"] = {{"t_final", t_final},
                             {"snapshots", snapshots},
                             {"space", space}};

    double norm_drift = 0;
    for (int s = 0; s < snapshots; ++s) {
        const double t =
            snapshots == 1 ? t_final : t_final * s / static_cast<double>(snapshots - 1);
        const lattice::SpinorGrid st = lattice::evolve(initial, t);
        norm_drift = std::max(norm_drift, std::abs(st.norm_sq() - 1.0));
        std::ostringstream csv;
        if (space == "position") lattice::write_position_csv(csv, lattice::to_position(st));
        else lattice::write_momentum_csv(csv, st);
        char name[32];
        std::snprintf(name, sizeof name, "snapshot_%03d.csv", s);
        out.write(name, csv.str());
    }
    summary["max_norm_drift"] = norm_drift;
    const bool pass = norm_drift <= 1e-12;
    finish_summary(out, summary, pass);
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// arrival

ArrivalPipelineParams pipeline_params_from(const Config& cfg) {
    ArrivalPipelineParams p;
    p.detector_x = cfg.get_double("detector.x");
    p.t_min = cfg.get_double("detector.t_min");
    p.t_max = cfg.get_double("detector.t_max");
    p.detector_samples = static_cast<int>(cfg.get_int_or("detector.samples", 801));
    p.x_lo = cfg.get_double("surface.x_lo");
    p.x_hi = cfg.get_double("surface.x_hi");
    p.surface_samples = static_cast<int>(cfg.get_int_or("surface.samples", 1024));
    p.renormalize = cfg.get_bool_or("surface.renormalize", true);
    if (cfg.has("snapshots.times")) {
        p.snapshot_times = cfg.get_double_list("snapshots.times");
    } else {
        p.snapshot_times = {p.t_min, 0.5 * (p.t_min + p.t_max), p.t_max};
    }
    return p;
}

const std::vector<KeySpec> kPipelineKeys = {
    {"detector.x", KeyKind::double_, true},
    {"detector.t_min", KeyKind::double_, true},
    {"detector.t_max", KeyKind::double_, true},
    {"detector.samples", KeyKind::int_, false},
    {"surface.x_lo", KeyKind::double_, true},
    {"surface.x_hi", KeyKind::double_, true},
    {"surface.samples", KeyKind::int_, false},
    {"surface.renormalize", KeyKind::bool_, false},
    {"snapshots.times", KeyKind::double_list, false},
};

int cmd_arrival(const Config& cfg, OutputWriter& out) {
    validate_config(cfg, concat({kGridKeys, kModelKeys, kPacketKeys, kPipelineKeys,
                                 {
                                     {"checks.enabled", KeyKind::bool_, false},
                                     {"checks.oracle_rel_tol", KeyKind::double_, false},
                                     {"checks.cross_rel_tol", KeyKind::double_, false},
                                 }}));
    const lattice::Model model = model_from(cfg);
    const lattice::SpinorGrid initial = packet_from(cfg, model);
    const ArrivalPipelineParams params = pipeline_params_from(cfg);
    const double x0 = cfg.get_double("packet.x0");
    const double p0 = cfg.get_double("packet.p0");

    const ArrivalOutputs res = run_arrival_pipeline(initial, x0, p0, params);

    const chronometry::EstimatorResult rows[] = {res.eq12, res.eq13, res.eq14, res.eq16,
                                                 res.eq17};
    std::ostringstream table;
    chronometry::write_report_csv(table, rows);
    out.write("arrival_table.csv", table.str());

    json summary;
    summary["command"] = "arrival";
    summary["parameters"] = {{"detector_x", params.detector_x},
                             {"oracle_time", res.oracle_time}};
    for (const auto& r : rows)
        summary["estimators"][chronometry::method_name(r.method)] = estimator_json(r);
    summary["eq12_demo"] = {{"weight_sum", res.demo.weight_sum},
                            {"refinement_sensitivity", res.demo.refinement_sensitivity}};
    summary["negative_current_fraction"] = res.negative_current_fraction;

    bool pass = true;
    if (cfg.get_bool_or("checks.enabled", true)) {
        const double oracle_tol = cfg.get_double_or("checks.oracle_rel_tol", 0.01);
        const double cross_tol = cfg.get_double_or("checks.cross_rel_tol", 0.02);
        const double scale = std::abs(res.oracle_time);
        const double devs[] = {std::abs(res.eq13.mean_time - res.oracle_time),
                               std::abs(res.eq16.mean_time - res.oracle_time),
                               std::abs(res.eq17.mean_time - res.oracle_time)};
        double max_oracle_dev = 0, max_cross_dev = 0;
        for (double d : devs) max_oracle_dev = std::max(max_oracle_dev, d);
        const double means[] = {res.eq13.mean_time, res.eq16.mean_time,
                                res.eq17.mean_time};
        for (double a : means)
            for (double b : means) max_cross_dev = std::max(max_cross_dev, std::abs(a - b));
        summary["max_deviations"] = {{"from_oracle_rel", max_oracle_dev / scale},
                                     {"cross_rel", max_cross_dev / scale}};
        pass = max_oracle_dev <= oracle_tol * scale && max_cross_dev <= cross_tol * scale;
    }
    finish_summary(out, summary, pass);
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// pauli-shift

int cmd_pauli_shift(const Config& cfg, OutputWriter& out) {
    validate_config(cfg, concat({kGridKeys, kModelKeys, kPacketKeys, kPipelineKeys,
                                 {
                                     {"shift.alphas", KeyKind::double_list, true},
                                     {"spectrum.n", KeyKind::int_, false},
                                     {"spectrum.p_max", KeyKind::double_, false},
                                     {"spectrum.mass", KeyKind::double_, false},
                                     {"modulate.p", KeyKind::double_, false},
                                     {"modulate.mass", KeyKind::double_, false},
                                     {"modulate.samples", KeyKind::int_, false},
                                     {"modulate.dt", KeyKind::double_, false},
                                 }}));
    const lattice::Model model = model_from(cfg);
    const lattice::SpinorGrid initial = packet_from(cfg, model);
    const ArrivalPipelineParams params = pipeline_params_from(cfg);
    const double x0 = cfg.get_double("packet.x0");
    const double p0 = cfg.get_double("packet.p0");
    const std::vector<double> alphas = cfg.get_double_list("shift.alphas");

    const lattice::MomentumGrid spec_grid(
        static_cast<int>(cfg.get_int_or("spectrum.n", 128)),
        cfg.get_double_or("spectrum.p_max", cfg.get_double("grid.p_max")));
    const double spec_mass = cfg.get_double_or("spectrum.mass", 1.0);
    const lattice::OperatorMatrix h_spec = lattice::dirac_hamiltonian(spec_grid, spec_mass);
    const energy::SpectrumReport base_spec = energy::spectrum(h_spec);
    {
        std::ostringstream csv;
        energy::write_spectrum_csv(csv, base_spec);
        out.write("spectrum_base.csv", csv.str());
    }
    const std::vector<double> base_diffs = base_spec.pairwise_differences();

    // stationary mode for the phase-modulation experiment
    const double mod_p = cfg.get_double_or("modulate.p", 2.0);
    const double mod_mass = cfg.get_double_or("modulate.mass", 1.0);
    const int mod_samples = static_cast<int>(cfg.get_int_or("modulate.samples", 64));
    const double mod_dt = cfg.get_double_or("modulate.dt", 0.1);
    const double mod_energy = std::hypot(mod_p, mod_mass);
    energy::StationarySeries stationary;
    stationary.t0 = 0;
    stationary.dt = mod_dt;
    stationary.samples.resize(mod_samples);
    {
        // u(x) = exp(i p x) u_plus sampled on a short x strip
        const double e = mod_energy;
        const double a = e + mod_mass, b = mod_p;
        const double r = std::sqrt(a * a + b * b);
        for (int j = 0; j < mod_samples; ++j) {
            const double t = stationary.t(j);
            auto& row = stationary.samples[j];
            row.resize(64);
            for (int xi = 0; xi < 32; ++xi) {
                const double x = 0.25 * xi;
                const lattice::Complex u = std::polar(1.0, mod_p * x);
                const lattice::Complex ph = std::polar(1.0, -e * t);
                row[2 * xi] = ph * u * (a / r);
                row[2 * xi + 1] = ph * u * (b / r);
            }
        }
    }

    const ArrivalOutputs base_run = run_arrival_pipeline(initial, x0, p0, params);

    json summary;
    summary["command"] = "pauli-shift";
    summary["parameters"] = {{"alphas", alphas},
                             {"spectrum_mass", spec_mass},
                             {"modulate_energy", mod_energy}};
    bool pass = true;
    std::ostringstream dev_csv;
    dev_csv << "alpha,max_density_deviation,max_difference_deviation\n";

    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
        const double alpha = alphas[ai];
        json entry;

        // spectra: eigenvalues shift by exactly -alpha, differences stay
        const energy::SpectrumReport shifted =
            energy::spectrum(energy::shift_hamiltonian(h_spec, alpha));
        {
            std::ostringstream csv;
            energy::write_spectrum_csv(csv, shifted);
            char name[40];
            std::snprintf(name, sizeof name, "spectrum_shift_%02zu.csv", ai);
            out.write(name, csv.str());
        }
        double dev_shift = 0;
        for (std::size_t i = 0; i < shifted.eigenvalues.size(); ++i)
            dev_shift = std::max(dev_shift, std::abs(shifted.eigenvalues[i] -
                                                     (base_spec.eigenvalues[i] - alpha)));
        const std::vector<double> shifted_diffs = shifted.pairwise_differences();
        double dev_diff = 0;
        for (std::size_t i = 0; i < base_diffs.size(); ++i)
            dev_diff = std::max(dev_diff, std::abs(shifted_diffs[i] - base_diffs[i]));
        entry["spectrum_shift_deviation"] = dev_shift;
        entry["difference_deviation"] = dev_diff;
        pass = pass && dev_shift <= 1e-12 && dev_diff <= 1e-12;

        // densities, currents and every estimator under H -> H - alpha
        lattice::Model shifted_model = model;
        shifted_model.energy_offset = model.energy_offset + alpha;
        const lattice::SpinorGrid shifted_initial =
            lattice::gaussian_packet(initial.grid, shifted_model,
                                     cfg.get_double("packet.x0"), p0,
                                     cfg.get_double("packet.sigma_p"),
                                     projection_from(cfg));
        const ArrivalOutputs shifted_run =
            run_arrival_pipeline(shifted_initial, x0, p0, params);
        double dev_density = 0;
        {
            const double t_probe = 0.5 * (params.t_min + params.t_max);
            const auto f0 = lattice::to_position(lattice::evolve(initial, t_probe));
            const auto f1 =
                lattice::to_position(lattice::evolve(shifted_initial, t_probe));
            const auto rho0 = lattice::probability_density(f0);
            const auto rho1 = lattice::probability_density(f1);
            const auto cur0 = lattice::current_density(f0);
            const auto cur1 = lattice::current_density(f1);
            for (std::size_t i = 0; i < rho0.size(); ++i) {
                dev_density = std::max(dev_density, std::abs(rho0[i] - rho1[i]));
                dev_density = std::max(dev_density, std::abs(cur0[i] - cur1[i]));
            }
        }
        const double est_pairs[][2] = {
            {base_run.eq12.mean_time, shifted_run.eq12.mean_time},
            {base_run.eq13.mean_time, shifted_run.eq13.mean_time},
            {base_run.eq14.mean_time, shifted_run.eq14.mean_time},
            {base_run.eq16.mean_time, shifted_run.eq16.mean_time},
            {base_run.eq17.mean_time, shifted_run.eq17.mean_time}};
        for (const auto& pr : est_pairs)
            dev_density = std::max(dev_density, std::abs(pr[0] - pr[1]));
        entry["invariance_deviation"] = dev_density;
        pass = pass && dev_density <= 1e-10;

        // ladder: exact mode shift raises <H> by alpha (massless only)
        if (model.kind == lattice::ModelKind::dirac && model.mass == 0.0) {
            const double h0 = lattice::hamiltonian_expectation(initial);
            const lattice::SpinorGrid raised = energy::ladder_apply(initial, alpha);
            const double h1 = lattice::hamiltonian_expectation(raised);
            const double dev_ladder = std::abs(h1 - (h0 + alpha));
            entry["ladder_deviation"] = dev_ladder;
            entry["ladder_norm_drift"] = std::abs(raised.norm_sq() - 1.0);
            pass = pass && dev_ladder <= 1e-8;
        } else {
            entry["ladder_deviation"] = "skipped (massive model refuses the ladder)";
        }

        // phase modulation: frequency drops to E - alpha, profile intact
        const energy::StationarySeries modulated =
            energy::phase_modulate(stationary, alpha);
        const double fitted = energy::fit_frequency(modulated);
        const double dev_mod = std::abs(fitted - (mod_energy - alpha));
        double dev_profile = 0;
        for (std::size_t j = 0; j < modulated.samples.size(); ++j)
            for (std::size_t x = 0; x < modulated.samples[j].size(); ++x)
                dev_profile = std::max(dev_profile,
                                       std::abs(std::abs(modulated.samples[j][x]) -
                                                std::abs(stationary.samples[j][x])));
        entry["modulated_frequency"] = fitted;
        entry["modulation_deviation"] = dev_mod;
        entry["profile_deviation"] = dev_profile;
        pass = pass && dev_mod <= 1e-8 && dev_profile <= 1e-10;

        summary["shifts"][fmt17(alpha)] = entry;
        dev_csv << fmt17(alpha) << ',' << fmt17(dev_density) << ',' << fmt17(dev_diff)
                << '\n';
    }
    out.write("deviations.csv", dev_csv.str());
    finish_summary(out, summary, pass);
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// em-moment

std::vector<em::PointCharge> read_particle_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open particle file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "charge,mass,velocity,t,x1")
        throw ConfigError("particle file must start with charge,mass,velocity,t,x1");
    std::vector<em::PointCharge> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        double v[5];
        char comma;
        row >> v[0];
        for (int i = 1; i < 5; ++i) {
            row >> comma >> v[i];
            if (!row || comma != ',')
                throw ConfigError(path + ":" + std::to_string(lineno) + ": bad row");
        }
        out.emplace_back(v[0], v[1], v[2], v[3], v[4]);
    }
    if (out.empty()) throw ConfigError("particle file has no rows: " + path);
    return out;
}

int cmd_em_moment(const Config& cfg, OutputWriter& out) {
    validate_config(cfg, {
                             {"particles.file", KeyKind::string_, true},
                             {"boost.v", KeyKind::double_, false},
                             {"boost.t", KeyKind::double_, false},
                             {"boost.x1", KeyKind::double_, false},
                             {"boost.m", KeyKind::double_, false},
                             {"boost.e", KeyKind::double_, false},
                         });
    const std::string rel = cfg.get_string("particles.file");
    const fs::path particle_path = fs::path(rel).is_absolute()
                                       ? fs::path(rel)
                                       : fs::path(cfg.base_dir()) / rel;
    const std::vector<em::PointCharge> particles = read_particle_csv(particle_path.string());

    const em::MomentTensor j = em::angular_momentum_tensor(particles);
    const em::MomentTensor m = em::electromagnetic_moment(particles);
    {
        std::ostringstream csv;
        em::write_tensor_csv(csv, j, "Sigma");
        out.write("angular_momentum.csv", csv.str());
    }
    {
        std::ostringstream csv;
        em::write_tensor_csv(csv, m, "Sigma");
        out.write("electromagnetic_moment.csv", csv.str());
    }

    json summary;
    summary["command"] = "em-moment";
    summary["parameters"] = {{"particles", particles.size()}};
    summary["j10"] = j.at(1, 0);
    summary["m10"] = m.at(1, 0);

    bool pass = true;
    try {
        const double ratio = em::shared_charge_ratio(particles);
        double dev = 0;
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                dev = std::max(dev, std::abs(m.at(mu, nu) - ratio * j.at(mu, nu)));
        summary["proportionality"] = {{"ratio", ratio}, {"max_deviation", dev}};
        pass = dev <= 1e-12;
    } catch (const em::MixedRatio&) {
        summary["proportionality"] = "skipped (mixed charge-to-mass ratios)";
    }

    const bool any_boost = cfg.has("boost.v") || cfg.has("boost.x1") || cfg.has("boost.m");
    if (any_boost) {
        if (!(cfg.has("boost.v") && cfg.has("boost.x1") && cfg.has("boost.m")))
            throw ConfigError("boost needs v, x1 and m");
        const em::BoostMoments b =
            em::boost_example(cfg.get_double("boost.v"), cfg.get_double_or("boost.t", 0.0),
                              cfg.get_double("boost.x1"), cfg.get_double("boost.m"),
                              cfg.get_double_or("boost.e", 1.0));
        em::MomentTensor jb;
        jb.c[1][0] = b.j10;
        jb.c[0][1] = -b.j10;
        em::MomentTensor mb;
        mb.c[1][0] = b.m10;
        mb.c[0][1] = -b.m10;
        {
            std::ostringstream csv;
            em::write_tensor_csv(csv, jb, "SigmaPrime");
            out.write("angular_momentum_boosted.csv", csv.str());
        }
        {
            std::ostringstream csv;
            em::write_tensor_csv(csv, mb, "SigmaPrime");
            out.write("electromagnetic_moment_boosted.csv", csv.str());
        }
        summary["boost"] = {{"energy", b.energy},
                            {"momentum", b.momentum},
                            {"j10", b.j10},
                            {"m10", b.m10}};
    }

    finish_summary(out, summary, pass);
    return pass ? 0 : 1;
}

}  // namespace

bool known_command(const std::string& command) {
    return command == "verify-algebra" || command == "evolve" || command == "arrival" ||
           command == "pauli-shift" || command == "em-moment";
}

int run_with_config(const std::string& command, const Config& config,
                    const std::string& out_dir, std::uint64_t seed) {
    OutputWriter out(out_dir);
    if (command == "verify-algebra") return cmd_verify_algebra(config, out, seed);
    if (command == "evolve") return cmd_evolve(config, out);
    if (command == "arrival") return cmd_arrival(config, out);
    if (command == "pauli-shift") return cmd_pauli_shift(config, out);
    if (command == "em-moment") return cmd_em_moment(config, out);
    throw ConfigError("unknown command: " + command);
}

int run_command(const std::string& command, const std::string& config_path,
                const std::string& out_dir, std::uint64_t seed, std::ostream& diag) {
    try {
        const Config config = Config::parse_file(config_path);
        return run_with_config(command, config, out_dir, seed);
    } catch (const ConfigError& e) {
        diag << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        diag << "config error: " << e.what() << '\n';
        return 2;
    } catch (const lattice::BandLimitViolation& e) {
        diag << "config error: " << e.what() << '\n';
        return 2;
    } catch (const energy::OffLattice& e) {
        diag << "config error: " << e.what() << '\n';
        return 2;
    } catch (const energy::MassiveModel& e) {
        diag << "config error: " << e.what() << '\n';
        return 2;
    } catch (const em::SuperluminalBoost& e) {
        diag << "config error: " << e.what() << '\n';
        return 2;
    } catch (const em::MixedRatio& e) {
        diag << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace chronop::cli
