#include "qflow/trajectory_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace qflow {

using nlohmann::json;

std::string format_csv_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

namespace {

double round_trip(double v) { return std::strtod(format_csv_value(v).c_str(), nullptr); }

double parse_field(const std::string& s, std::size_t line) {
  if (s.empty()) throw FormatError("line " + std::to_string(line) + ": empty field");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) {
    throw FormatError("line " + std::to_string(line) + ": not a number: '" + s + "'");
  }
  return v;
}

json params_json(const EllipticParams<double>& p) {
  return {{"g2", p.g2},
          {"g3", p.g3},
          {"weierstrass_disc", p.weierstrass_disc},
          {"lattice_class", std::string(to_string(p.lattice_class))}};
}

}  // namespace

Trajectory quantize(const Trajectory& traj) {
  Trajectory out = traj;
  for (auto& s : out.samples) {
    s.t = round_trip(s.t);
    s.p = round_trip(s.p);
    s.q = round_trip(s.q);
    s.psi = round_trip(s.psi);
    s.F = round_trip(s.F);
    s.Fdot = round_trip(s.Fdot);
  }
  return out;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << kTrajectoryCsvHeader << '\n';
  for (const auto& s : traj.samples) {
    os << format_csv_value(s.t) << ',' << format_csv_value(s.p) << ',' << format_csv_value(s.q)
       << ',' << format_csv_value(s.psi) << ',' << format_csv_value(s.F) << ','
       << format_csv_value(s.Fdot) << '\n';
  }
}

std::vector<TrajectorySample> read_trajectory_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("line 1: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTrajectoryCsvHeader) {
    throw FormatError("line 1: expected header '" + std::string(kTrajectoryCsvHeader) +
                      "', got '" + line + "'");
  }
  std::vector<TrajectorySample> samples;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 6) {
      throw FormatError("line " + std::to_string(lineno) + ": expected 6 fields, got " +
                        std::to_string(fields.size()));
    }
    TrajectorySample s;
    s.t = parse_field(fields[0], lineno);
    s.p = parse_field(fields[1], lineno);
    s.q = parse_field(fields[2], lineno);
    s.psi = parse_field(fields[3], lineno);
    s.F = parse_field(fields[4], lineno);
    s.Fdot = parse_field(fields[5], lineno);
    if (!samples.empty() && !(s.t > samples.back().t)) {
      throw FormatError("line " + std::to_string(lineno) + ": sample times must increase");
    }
    samples.push_back(s);
  }
  return samples;
}

json make_sidecar(const RunConfig& config, const Trajectory& traj, const DriftReport& drift) {
  json j = to_json(config);
  j.erase("output");
  j["status"] = std::string(to_string(traj.status));
  j["samples"] = traj.samples.size();
  j["accepted_steps"] = traj.accepted_steps;
  j["rejected_steps"] = traj.rejected_steps;
  j["last_good_state"] = {{"t", traj.last_good.t}, {"p", traj.last_good.p}, {"q", traj.last_good.q}};
  j["elliptic_params"] = traj.params ? params_json(*traj.params) : json(nullptr);
  j["drift_report"] = {
      {"max_rel_drift_psi", drift.max_rel_drift_psi},
      {"max_rel_drift_g2", drift.max_rel_drift_g2},
      {"max_rel_drift_g3", drift.max_rel_drift_g3},
      {"max_abs_residual_weierstrass_ode", drift.max_abs_residual_weierstrass_ode},
  };
  if (auto spec = spec_of(config.hamiltonian)) {
    json inv;
    if (spec->is_cubic()) {
      inv["D"] = to_string(discriminant_cubic(spec->cubic()));
    } else {
      const InvariantSet set = invariants(spec->quartic());
      inv["S"] = to_string(*set.S);
      inv["T"] = to_string(*set.T);
      inv["disc"] = to_string(*set.disc);
    }
    j["invariants"] = inv;
  }
  return j;
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv) {
  std::filesystem::path p = csv;
  p.replace_extension(".json");
  return p;
}

TrajectoryFiles write_trajectory_files(const RunConfig& config, const Trajectory& traj,
                                       const DriftReport& drift) {
  const std::filesystem::path dir(config.output.directory);
  std::filesystem::create_directories(dir);
  TrajectoryFiles files;
  for (const auto& format : config.output.formats) {
    if (format == "csv") {
      files.csv = dir / (config.output.basename + ".csv");
      std::ofstream os(files.csv);
      if (!os) throw std::runtime_error("cannot write " + files.csv.string());
      write_trajectory_csv(os, traj);
    } else if (format == "json") {
      files.json = dir / (config.output.basename + ".json");
      std::ofstream os(files.json);
      if (!os) throw std::runtime_error("cannot write " + files.json.string());
      os << make_sidecar(config, traj, drift).dump(2) << '\n';
    }
  }
  return files;
}

Trajectory read_trajectory_files(const std::filesystem::path& csv) {
  std::ifstream is(csv);
  if (!is) throw FormatError("cannot open " + csv.string());
  Trajectory traj;
  traj.samples = read_trajectory_csv(is);

  const auto side = sidecar_path(csv);
  std::ifstream js(side);
  if (!js) throw FormatError("cannot open sidecar " + side.string());
  json j;
  try {
    j = json::parse(js);
    const auto status = flow_status_from_string(j.at("status").get<std::string>());
    if (!status) throw FormatError(side.string() + ": unknown status");
    traj.status = *status;
    if (j.contains("last_good_state")) {
      const auto& s = j.at("last_good_state");
      traj.last_good = {s.at("t").get<double>(), s.at("p").get<double>(), s.at("q").get<double>()};
    }
    const auto& params = j.at("elliptic_params");
    if (!params.is_null()) {
      const auto cls = lattice_class_from_string(params.at("lattice_class").get<std::string>());
      if (!cls) throw FormatError(side.string() + ": unknown lattice class");
      traj.params = EllipticParams<double>{params.at("g2").get<double>(),
                                           params.at("g3").get<double>(),
                                           params.at("weierstrass_disc").get<double>(), *cls};
    }
  } catch (const json::exception& e) {
    throw FormatError(side.string() + ": " + e.what());
  }
  return traj;
}

}  // namespace qflow
