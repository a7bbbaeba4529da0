#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include "qflow/trajectory_io.hpp"
#include "qflow/weierstrass.hpp"
#include "test_support.hpp"

using namespace qflow;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("qflow_io_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

RunConfig cube_sum_config(double p0, double q0, double t_end) {
  RunConfig cfg;
  cfg.hamiltonian = {3, {Rational(1), Rational(0), Rational(0), Rational(1)}};
  cfg.p0 = p0;
  cfg.q0 = q0;
  cfg.integrator.t_end = t_end;
  return cfg;
}

Trajectory run(const RunConfig& cfg) {
  return integrate(build_hamiltonian(cfg.hamiltonian), {0, cfg.p0, cfg.q0}, cfg.integrator);
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("csv values carry 15 significant digits") {
  CHECK(format_csv_value(0.1) == "0.1");
  CHECK(format_csv_value(1.0 / 3) == "0.333333333333333");
  CHECK(format_csv_value(-2.5e-20) == "-2.5e-20");
  CHECK(format_csv_value(123456789012345678.0) == "1.23456789012346e+17");
}

TEST_CASE("csv round trip reproduces the quantized trajectory") {
  const Trajectory traj = run(cube_sum_config(1, 0, 1.2));
  std::stringstream ss;
  write_trajectory_csv(ss, traj);
  std::string header;
  std::getline(std::istringstream(ss.str()) >> std::ws, header);
  CHECK(header == "t,p,q,psi,F,Fdot");

  const auto back = read_trajectory_csv(ss);
  const Trajectory q = quantize(traj);
  REQUIRE(back.size() == traj.samples.size());
  for (std::size_t k = 0; k < back.size(); ++k) {
    CHECK(same_bits(back[k].t, q.samples[k].t));
    CHECK(same_bits(back[k].p, q.samples[k].p));
    CHECK(same_bits(back[k].q, q.samples[k].q));
    CHECK(same_bits(back[k].psi, q.samples[k].psi));
    CHECK(same_bits(back[k].F, q.samples[k].F));
    CHECK(same_bits(back[k].Fdot, q.samples[k].Fdot));
    CHECK(std::abs(back[k].p - traj.samples[k].p) <= 1e-14 * std::max(1.0, std::abs(traj.samples[k].p)));
  }
}

TEST_CASE("csv format errors name the line") {
  auto read = [](const std::string& text) {
    std::istringstream is(text);
    return read_trajectory_csv(is);
  };
  CHECK_THROWS_WITH_AS(read(""), doctest::Contains("line 1"), FormatError);
  CHECK_THROWS_WITH_AS(read("t,p,q\n"), doctest::Contains("header"), FormatError);
  CHECK_THROWS_WITH_AS(read("t,p,q,psi,F,Fdot\n0,1,0,0.3,0,-1\n0.1,1,0\n"),
                       doctest::Contains("line 3"), FormatError);
  CHECK_THROWS_WITH_AS(read("t,p,q,psi,F,Fdot\n0,1,0,0.3,x,-1\n"), doctest::Contains("line 2"),
                       FormatError);
  CHECK_THROWS_WITH_AS(read("t,p,q,psi,F,Fdot\n0.1,1,0,0,0,0\n0.1,1,0,0,0,0\n"),
                       doctest::Contains("increase"), FormatError);
  CHECK(read("t,p,q,psi,F,Fdot\n").empty());
  CHECK(read("t,p,q,psi,F,Fdot\n0,1,0,0.3,nan,nan\n").size() == 1);
}

TEST_CASE("sidecar contents") {
  const RunConfig cfg = cube_sum_config(1, 0, 1.2);
  const Trajectory traj = run(cfg);
  const DriftReport drift = drift_report(traj, build_hamiltonian(cfg.hamiltonian));
  const auto j = make_sidecar(cfg, traj, drift);
  CHECK(j.at("status") == "completed");
  CHECK(j.at("samples") == traj.samples.size());
  CHECK(j.at("hamiltonian").at("degree") == 3);
  CHECK(j.at("hamiltonian").at("coefficients") == nlohmann::json({"1", "0", "0", "1"}));
  CHECK(j.at("elliptic_params").at("g2") == 0.0);
  CHECK(j.at("elliptic_params").at("g3").get<double>() == doctest::Approx(-1.0));
  CHECK(j.at("elliptic_params").at("lattice_class") == "equianharmonic");
  CHECK(j.at("invariants").at("D") == "1");
  CHECK(j.at("integrator").at("t_end") == 1.2);
  CHECK(j.at("drift_report").at("max_rel_drift_psi").get<double>() <= 1e-9);
  CHECK_FALSE(j.contains("output"));

  RunConfig osc;
  osc.hamiltonian = {2, {Rational(1), Rational(0), Rational(1)}};
  osc.p0 = 1;
  const Trajectory otraj = run(osc);
  const auto oj = make_sidecar(osc, otraj, drift_report(otraj, build_hamiltonian(osc.hamiltonian)));
  CHECK(oj.at("elliptic_params").is_null());
  CHECK_FALSE(oj.contains("invariants"));
}

TEST_CASE("files round trip, including a truncated blow-up run") {
  TempDir tmp;
  for (const auto& [p0, q0, status] : {std::tuple{1.0, 0.0, FlowStatus::completed},
                                       std::tuple{-1.0, 1.0, FlowStatus::blew_up}}) {
    RunConfig cfg = cube_sum_config(p0, q0, 1.2);
    cfg.output.directory = tmp.path.string();
    cfg.output.basename = status == FlowStatus::completed ? "worked" : "blowup";
    const Trajectory traj = run(cfg);
    REQUIRE(traj.status == status);
    const DriftReport drift = drift_report(traj, build_hamiltonian(cfg.hamiltonian));
    const TrajectoryFiles files = write_trajectory_files(cfg, traj, drift);
    CHECK(fs::exists(files.csv));
    CHECK(fs::exists(files.json));
    CHECK(sidecar_path(files.csv) == files.json);

    const Trajectory back = read_trajectory_files(files.csv);
    CHECK(back.status == status);
    REQUIRE(back.params.has_value());
    CHECK(same_bits(back.params->g3, traj.params->g3));
    CHECK(back.params->lattice_class == traj.params->lattice_class);
    CHECK(same_bits(back.last_good.t, traj.last_good.t));
    REQUIRE(back.samples.size() == traj.samples.size());

    // Fitting the re-read files matches the in-memory fit bit for bit.
    const ShiftFit mem = fit_shift(quantize(traj));
    const ShiftFit disk = fit_shift(back);
    CHECK(same_bits(mem.t0, disk.t0));
    CHECK(same_bits(mem.max_residual, disk.max_residual));
    CHECK(mem.reference_index == disk.reference_index);
  }
}

TEST_CASE("output formats select the files") {
  TempDir tmp;
  RunConfig cfg = cube_sum_config(1, 0, 0.5);
  cfg.output.directory = (tmp.path / "nested" / "dir").string();
  cfg.output.formats = {"csv"};
  const Trajectory traj = run(cfg);
  const TrajectoryFiles files = write_trajectory_files(cfg, traj, DriftReport{});
  CHECK(fs::exists(files.csv));
  CHECK(files.json.empty());
  CHECK_THROWS_AS(read_trajectory_files(files.csv), FormatError);
  CHECK_THROWS_AS(read_trajectory_files(tmp.path / "missing.csv"), FormatError);

  std::ofstream(sidecar_path(files.csv)) << "{\"status\": \"exploded\"}";
  CHECK_THROWS_AS(read_trajectory_files(files.csv), FormatError);
}
