#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qflow/hamilton_flow.hpp"
#include "qflow/run_config.hpp"

namespace qflow {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Header of the trajectory CSV.
inline constexpr const char* kTrajectoryCsvHeader = "t,p,q,psi,F,Fdot";

/// Values are written with 15 significant digits.
std::string format_csv_value(double v);

/// The trajectory as it reads back from CSV: every sample channel rounded to
/// 15 significant digits. Fitting a quantized trajectory in memory gives the
/// same bits as fitting the re-read files.
Trajectory quantize(const Trajectory& traj);

void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
/// Throws FormatError with the offending line number.
std::vector<TrajectorySample> read_trajectory_csv(std::istream& is);

nlohmann::json make_sidecar(const RunConfig& config, const Trajectory& traj,
                            const DriftReport& drift);

struct TrajectoryFiles {
  std::filesystem::path csv;
  std::filesystem::path json;
};

/// <directory>/<basename>.csv and .json per config.output.formats.
TrajectoryFiles write_trajectory_files(const RunConfig& config, const Trajectory& traj,
                                       const DriftReport& drift);

/// Sidecar path next to a CSV path (extension replaced by .json).
std::filesystem::path sidecar_path(const std::filesystem::path& csv);

/// Reads the CSV and its sidecar back into a Trajectory (samples, params,
/// status, last good state).
Trajectory read_trajectory_files(const std::filesystem::path& csv);

}  // namespace qflow
