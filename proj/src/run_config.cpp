#include "qflow/run_config.hpp"

namespace qflow {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError("missing field '" + path + key + "'");
  return j.at(key);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError("field '" + field + "' must be a number");
  return j.get<double>();
}

Rational rational(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ConfigError("field '" + field + "': " + e.what());
    }
  }
  throw ConfigError("field '" + field + "' must be an integer or a rational string like \"2/3\"");
}

void read_optional(const json& obj, const char* key, double& out, const std::string& path) {
  if (obj.contains(key)) out = number(obj.at(key), path + key);
}

}  // namespace

void validate(const HamiltonianConfig& h) {
  if (h.degree < 2 || h.degree > 4) {
    throw ConfigError("field 'hamiltonian.degree' must be 2, 3 or 4 (got " +
                      std::to_string(h.degree) + ")");
  }
  const std::size_t want = static_cast<std::size_t>(h.degree) + 1;
  if (h.degree == 2 && h.coefficients.size() != 3) {
    throw ConfigError("field 'hamiltonian.coefficients' needs 3 entries for degree 2");
  }
  if (h.degree > 2 && h.coefficients.size() != want) {
    throw ConfigError("field 'hamiltonian.coefficients' needs " + std::to_string(want) +
                      " entries for degree " + std::to_string(h.degree));
  }
}

std::optional<HamiltonianSpec> spec_of(const HamiltonianConfig& h) {
  validate(h);
  const auto& c = h.coefficients;
  if (h.degree == 3) return HamiltonianSpec{CubicCoeffs{c[0], c[1], c[2], c[3]}};
  if (h.degree == 4) return HamiltonianSpec{QuarticCoeffs{c[0], c[1], c[2], c[3], c[4]}};
  return std::nullopt;
}

Hamiltonian build_hamiltonian(const HamiltonianConfig& h) {
  if (auto spec = spec_of(h)) return Hamiltonian(*spec);
  const auto& c = h.coefficients;
  // 2 psi = a p^2 + 2b pq + c q^2
  return Hamiltonian(std::vector<BinaryForm>{
      BinaryForm({Rational(c[0] / 2), c[1], Rational(c[2] / 2)})});
}

HamiltonianConfig config_of(const HamiltonianSpec& h) {
  if (h.is_cubic()) {
    const auto& c = h.cubic();
    return {3, {c.a, c.b, c.c, c.d}};
  }
  const auto& c = h.quartic();
  return {4, {c.a, c.b, c.c, c.d, c.e}};
}

RunConfig parse_run_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig cfg;

  const json& ham = require(j, "hamiltonian", "");
  const json& degree = require(ham, "degree", "hamiltonian.");
  if (!degree.is_number_integer()) throw ConfigError("field 'hamiltonian.degree' must be an integer");
  cfg.hamiltonian.degree = degree.get<int>();
  const json& coeffs = require(ham, "coefficients", "hamiltonian.");
  if (!coeffs.is_array()) throw ConfigError("field 'hamiltonian.coefficients' must be an array");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    cfg.hamiltonian.coefficients.push_back(
        rational(coeffs[i], "hamiltonian.coefficients[" + std::to_string(i) + "]"));
  }
  validate(cfg.hamiltonian);

  const json& init = require(j, "initial_state", "");
  cfg.p0 = number(require(init, "p", "initial_state."), "initial_state.p");
  cfg.q0 = number(require(init, "q", "initial_state."), "initial_state.q");

  if (j.contains("integrator")) {
    const json& in = j.at("integrator");
    if (!in.is_object()) throw ConfigError("field 'integrator' must be an object");
    const std::string p = "integrator.";
    read_optional(in, "rel_tol", cfg.integrator.rel_tol, p);
    read_optional(in, "abs_tol", cfg.integrator.abs_tol, p);
    read_optional(in, "initial_step", cfg.integrator.initial_step, p);
    read_optional(in, "max_step", cfg.integrator.max_step, p);
    read_optional(in, "blow_up_threshold", cfg.integrator.blow_up_threshold, p);
    read_optional(in, "t_end", cfg.integrator.t_end, p);
    read_optional(in, "sample_interval", cfg.integrator.sample_interval, p);
  }
  try {
    cfg.integrator.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  if (j.contains("output")) {
    const json& out = j.at("output");
    if (!out.is_object()) throw ConfigError("field 'output' must be an object");
    if (out.contains("directory")) {
      if (!out.at("directory").is_string()) throw ConfigError("field 'output.directory' must be a string");
      cfg.output.directory = out.at("directory").get<std::string>();
    }
    if (out.contains("basename")) {
      if (!out.at("basename").is_string()) throw ConfigError("field 'output.basename' must be a string");
      cfg.output.basename = out.at("basename").get<std::string>();
    }
    if (out.contains("formats")) {
      const json& f = out.at("formats");
      if (!f.is_array()) throw ConfigError("field 'output.formats' must be an array");
      cfg.output.formats.clear();
      for (const auto& x : f) {
        if (!x.is_string() || (x != "csv" && x != "json")) {
          throw ConfigError("field 'output.formats' accepts \"csv\" and \"json\"");
        }
        cfg.output.formats.push_back(x.get<std::string>());
      }
    }
  }
  return cfg;
}

nlohmann::json to_json(const RunConfig& config) {
  json coeffs = json::array();
  for (const auto& c : config.hamiltonian.coefficients) coeffs.push_back(to_string(c));
  const auto& in = config.integrator;
  return json{
      {"hamiltonian", {{"degree", config.hamiltonian.degree}, {"coefficients", coeffs}}},
      {"initial_state", {{"p", config.p0}, {"q", config.q0}}},
      {"integrator",
       {{"rel_tol", in.rel_tol},
        {"abs_tol", in.abs_tol},
        {"initial_step", in.initial_step},
        {"max_step", in.max_step},
        {"blow_up_threshold", in.blow_up_threshold},
        {"t_end", in.t_end},
        {"sample_interval", in.sample_interval}}},
      {"output",
       {{"directory", config.output.directory},
        {"basename", config.output.basename},
        {"formats", config.output.formats}}},
  };
}

}  // namespace qflow
