#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qflow/covariant_dynamics.hpp"
#include "qflow/hamilton_flow.hpp"
#include "qflow/rational.hpp"

namespace qflow {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Degree 2 is a test-only quadratic, 2 psi = a p^2 + 2b pq + c q^2; degrees 3
/// and 4 use 3 psi resp. 4 psi in the binomial convention.
struct HamiltonianConfig {
  int degree = 3;
  std::vector<Rational> coefficients;
};

struct OutputConfig {
  std::string directory = ".";
  std::string basename = "trajectory";
  std::vector<std::string> formats = {"csv", "json"};
};

struct RunConfig {
  HamiltonianConfig hamiltonian;
  double p0 = 0;
  double q0 = 0;
  IntegratorConfig integrator;
  OutputConfig output;
};

/// Throws ConfigError naming the offending field ("hamiltonian.degree", ...).
RunConfig parse_run_config(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& config);

void validate(const HamiltonianConfig& h);
std::optional<HamiltonianSpec> spec_of(const HamiltonianConfig& h);
Hamiltonian build_hamiltonian(const HamiltonianConfig& h);

/// Coefficient list of a spec (4 or 5 entries).
HamiltonianConfig config_of(const HamiltonianSpec& h);

}  // namespace qflow
