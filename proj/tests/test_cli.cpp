// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chronop/lattice.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "experiments.hpp"

using namespace chronop;
using namespace chronop::cli;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("chronop_test_" + tag);
    fs::remove_all(p);
    return p;
}

std::string write_temp(const std::string& tag, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / ("chronop_cfg_" + tag + ".cfg");
    std::ofstream(p) << content;
    return p.string();
}

}  // namespace

TEST_CASE("config grammar") {
    const Config c = Config::parse_string("# comment\n"
                                          "top = 1\n"
                                          "[grid]\n"
                                          "n = 64   # trailing comment\n"
                                          "p_max = 8.5\n"
                                          "[flags]\n"
                                          "fast = on\n"
                                          "slow = false\n"
                                          "ratio = 3/2\n"
                                          "list = 1, 2.5, -3\n",
                                          "test");
    CHECK(c.get_int("top") == 1);
    CHECK(c.get_int("grid.n") == 64);
    CHECK(c.get_double("grid.p_max") == 8.5);
    CHECK(c.get_bool("flags.fast"));
    CHECK_FALSE(c.get_bool("flags.slow"));
    CHECK(c.get_rational("flags.ratio") == Rational(3, 2));
    CHECK(c.get_double_list("flags.list") == std::vector<double>{1.0, 2.5, -3.0});
    CHECK(c.get_int_or("missing", 7) == 7);
    CHECK_THROWS_AS(c.get_string("missing"), ConfigError);
    CHECK_THROWS_AS(c.get_int("grid.p_max"), ConfigError);
}

TEST_CASE("config parse errors") {
    CHECK_THROWS_AS(Config::parse_string("[unterminated\n", "t"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("key value\n", "t"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("= 3\n", "t"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("a = 1\na = 2\n", "t"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("[]\nx = 1\n", "t"), ConfigError);
}

TEST_CASE("schema validation") {
    const Config c = Config::parse_string("[a]\nx = 1\n", "t");
    CHECK_NOTHROW(validate_config(c, {{"a.x", KeyKind::int_, true}}));
    CHECK_THROWS_AS(validate_config(c, {{"a.y", KeyKind::int_, false}}), ConfigError);
    CHECK_THROWS_AS(validate_config(c, {{"a.x", KeyKind::int_, true},
                                        {"a.z", KeyKind::double_, true}}),
                    ConfigError);
    const Config bad = Config::parse_string("[a]\nx = oops\n", "t");
    CHECK_THROWS_AS(validate_config(bad, {{"a.x", KeyKind::int_, true}}), ConfigError);
}

TEST_CASE("classical velocities") {
    CHECK(classical_velocity(lattice::Model::schrodinger(2.0), 3.0) == 1.5);
    CHECK(classical_velocity(lattice::Model::dirac(0.0), 2.0) == 1.0);
    CHECK(classical_velocity(lattice::Model::dirac(0.0), -2.0) == -1.0);
    CHECK(classical_velocity(lattice::Model::dirac(3.0), 4.0) == doctest::Approx(0.8));
}

TEST_CASE("detector series matches direct evaluation") {
    const lattice::MomentumGrid g(64, 8.0);
    const auto s = lattice::gaussian_packet(g, lattice::Model::schrodinger(1.0), -2.0,
                                            1.0, 0.5);
    const auto series = detector_series(s, 1.0, 0.0, 2.0, 5);
    CHECK(series.dt == doctest::Approx(0.5));
    const auto st = lattice::evolve(s, 1.0);
    CHECK(series.density[2] == doctest::Approx(lattice::density_at(st, 1.0)).epsilon(1e-15));
    CHECK(series.current[2] == doctest::Approx(lattice::current_at(st, 1.0)).epsilon(1e-15));
}

TEST_CASE("arrival-time density mean tracks the current-based mean") {
    // ballistic packet: the change-of-variables mean and the
    // current-weighted detector mean agree at the percent level
    const lattice::MomentumGrid g(512, 4.0);
    const auto packet =
        lattice::gaussian_packet(g, lattice::Model::schrodinger(1.0), -25.0, 1.0, 0.07);
    ArrivalPipelineParams p;
    p.detector_x = 25.0;
    p.t_min = 20.0;
    p.t_max = 80.0;
    p.detector_samples = 601;
    p.x_lo = -5.0;
    p.x_hi = 55.0;
    p.surface_samples = 512;
    p.snapshot_times = {20.0, 50.0, 80.0};
    const auto run = run_arrival_pipeline(packet, -25.0, 1.0, p);
    CHECK(std::abs(run.eq16.mean_time - run.eq17.mean_time) <=
          0.01 * std::abs(run.eq17.mean_time));
    CHECK(run.eq16.validity_note == "paper-endorsed");
    CHECK(run.eq17.validity_note == "paper-critiqued");
    // surface mass is close to one, so no hidden renormalization
    CHECK(std::abs(run.eq14.raw_mass - 1.0) <= 1e-3);
}

TEST_CASE("unknown command is a config error") {
    const Config c = Config::parse_string("", "t");
    CHECK_THROWS_AS(run_with_config("frobnicate", c, "/tmp/chronop_nowhere", 1),
                    ConfigError);
}

TEST_CASE("malformed config exits 2 and writes nothing") {
    const std::string cfg = write_temp("bad", "bogus_key = 1\n");
    const fs::path out = temp_dir("bad");
    std::ostringstream diag;
    const int code = run_command("arrival", cfg, out.string(), 1, diag);
    CHECK(code == 2);
    CHECK_FALSE(fs::exists(out));
    CHECK(diag.str().find("config error") != std::string::npos);
}

TEST_CASE("missing config file exits 2") {
    std::ostringstream diag;
    CHECK(run_command("arrival", "/nonexistent.cfg", "/tmp/chronop_nowhere2", 1, diag) == 2);
}

TEST_CASE("physical precondition violations exit 2") {
    // packet support beyond the cutoff
    const std::string cfg = write_temp("band",
                                       "[grid]\nn = 64\np_max = 4\n"
                                       "[model]\nkind = schrodinger\nmass = 1\n"
                                       "[packet]\nx0 = 0\np0 = 3.9\nsigma_p = 0.5\n"
                                       "[run]\nt_final = 1\n");
    const fs::path out = temp_dir("band");
    std::ostringstream diag;
    CHECK(run_command("evolve", cfg, out.string(), 1, diag) == 2);
    CHECK_FALSE(fs::exists(out));
}

TEST_CASE("verify-algebra runs clean on a minimal config") {
    const std::string cfg = write_temp("verify", "[algebra]\nproperty_samples = 4\n");
    const fs::path out = temp_dir("verify");
    std::ostringstream diag;
    CHECK(run_command("verify-algebra", cfg, out.string(), 99, diag) == 0);
    CHECK(fs::exists(out / "summary.json"));
    CHECK(fs::exists(out / "time_squared_linearization.ledger.txt"));
    int ledgers = 0;
    for (const auto& entry : fs::directory_iterator(out))
        if (entry.path().string().ends_with(".ledger.txt")) ++ledgers;
    CHECK(ledgers == 9);
    fs::remove_all(out);
}

TEST_CASE("evolve writes the requested snapshots") {
    const std::string cfg = write_temp("evolve",
                                       "[grid]\nn = 64\np_max = 8\n"
                                       "[model]\nkind = schrodinger\nmass = 1\n"
                                       "[packet]\nx0 = 0\np0 = 1\nsigma_p = 0.5\n"
                                       "[run]\nt_final = 2\nsnapshots = 3\n");
    const fs::path out = temp_dir("evolve");
    std::ostringstream diag;
    CHECK(run_command("evolve", cfg, out.string(), 1, diag) == 0);
    CHECK(fs::exists(out / "snapshot_000.csv"));
    CHECK(fs::exists(out / "snapshot_002.csv"));
    std::ifstream in(out / "snapshot_000.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,density,current");
    fs::remove_all(out);
}
