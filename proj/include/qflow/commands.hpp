#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qflow/covariant_dynamics.hpp"
#include "qflow/rational.hpp"
#include "qflow/run_config.hpp"

namespace qflow::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBlowUp = 2;
inline constexpr int kExitStepFailure = 3;
inline constexpr int kExitCheckFailed = 4;

/// Parses a coefficient list, reporting the 1-based position of a bad entry.
std::vector<Rational> parse_coefficients(const std::vector<std::string>& args);

int cmd_invariants(const std::vector<std::string>& coeffs, int degree, std::ostream& out,
                   std::ostream& err);

struct VerifyOptions {
  int degree = 3;
  int trials = 1000;
  std::uint64_t seed = 7;
  int range = 20;  // coefficients drawn uniformly from [-range, range]
  unsigned jobs = 0;  // 0: hardware concurrency
};

struct IdentityTally {
  std::string name;
  int passed = 0;
};

struct VerifySummary {
  int degree = 3;
  int trials = 0;
  std::vector<IdentityTally> identities;
  /// First failing trial, in trial order.
  std::optional<int> first_failure_trial;
  std::optional<std::string> first_failure_identity;
  std::vector<Rational> first_failure_coeffs;

  bool all_passed() const { return !first_failure_trial.has_value(); }
};

/// The coefficient tuples of a verify run, trial by trial. Throws
/// std::invalid_argument for degrees other than 3 and 4.
std::vector<HamiltonianSpec> random_hamiltonians(int degree, int trials, std::uint64_t seed,
                                                 int range);

/// Every identity check for one Hamiltonian: (name, residual is zero).
std::vector<std::pair<std::string, bool>> check_identities(const HamiltonianSpec& h);

VerifySummary run_verify(const VerifyOptions& opts);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_fit(const std::filesystem::path& csv, double threshold, std::ostream& out,
            std::ostream& err);

int cmd_classify(double g2, double g3, double tol, std::ostream& out, std::ostream& err);

int cmd_wp_eval(double g2, double g3, double t, std::ostream& out, std::ostream& err);

}  // namespace qflow::cli
