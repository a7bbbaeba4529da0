// qflow: invariants, exact identity sweeps, Hamiltonian flow integration and
// Weierstrass certificates for cubic and quartic Hamiltonians.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qflow/commands.hpp"
#include "qflow/run_config.hpp"

int main(int argc, char** argv) {
  using namespace qflow;

  CLI::App app{"Covariants, flows and Weierstrass functions of binary cubics and quartics"};
  app.require_subcommand(1);

  auto* inv = app.add_subcommand("invariants", "Print invariants and covariants of a form");
  std::vector<std::string> cubic_args;
  std::vector<std::string> quartic_args;
  auto* cubic_opt = inv->add_option("--cubic", cubic_args, "a b c d (binomial convention)")
                        ->allow_extra_args();
  auto* quartic_opt = inv->add_option("--quartic", quartic_args, "a b c d e (binomial convention)")
                          ->allow_extra_args();
  cubic_opt->excludes(quartic_opt);

  auto* verify = app.add_subcommand("verify", "Check every identity on seeded random forms");
  cli::VerifyOptions vopts;
  verify->add_option("--degree", vopts.degree, "3 or 4")->required();
  verify->add_option("--trials", vopts.trials, "number of random forms")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopts.seed, "random seed");
  verify->add_option("--range", vopts.range, "coefficients drawn from [-range, range]")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", vopts.jobs, "worker threads (0: all cores)");

  auto* simulate = app.add_subcommand("simulate", "Integrate a Hamiltonian flow from a JSON config");
  std::string config_path;
  simulate->add_option("config", config_path, "run configuration (JSON)")->required();
  IntegratorConfig overrides;
  std::string out_dir;
  auto* o_rel = simulate->add_option("--rel-tol", overrides.rel_tol);
  auto* o_abs = simulate->add_option("--abs-tol", overrides.abs_tol);
  auto* o_h0 = simulate->add_option("--initial-step", overrides.initial_step);
  auto* o_hmax = simulate->add_option("--max-step", overrides.max_step);
  auto* o_blow = simulate->add_option("--blow-up-threshold", overrides.blow_up_threshold);
  auto* o_tend = simulate->add_option("--t-end", overrides.t_end);
  auto* o_dt = simulate->add_option("--sample-interval", overrides.sample_interval);
  auto* o_dir = simulate->add_option("--out-dir", out_dir, "override output.directory");

  auto* fit = app.add_subcommand("fit", "Certify a trajectory's F as a shifted Weierstrass wp");
  std::string csv_path;
  double threshold = 1e-6;
  fit->add_option("trajectory", csv_path, "trajectory CSV (sidecar JSON alongside)")->required();
  fit->add_option("--threshold", threshold, "certificate threshold on the max residual");

  auto* classify = app.add_subcommand("classify", "Classify the lattice of (g2, g3)");
  double g2 = 0;
  double g3 = 0;
  double tol = 1e-12;
  classify->add_option("--g2", g2)->required();
  classify->add_option("--g3", g3)->required();
  classify->add_option("--tol", tol);

  auto* wp = app.add_subcommand("wp-eval", "Evaluate wp and wp' on the real axis");
  double t = 0;
  wp->add_option("--g2", g2)->required();
  wp->add_option("--g3", g3)->required();
  wp->add_option("-t,--t", t)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  if (*inv) {
    if (*cubic_opt) return cli::cmd_invariants(cubic_args, 3, std::cout, std::cerr);
    if (*quartic_opt) return cli::cmd_invariants(quartic_args, 4, std::cout, std::cerr);
    std::cerr << "error: invariants needs --cubic or --quartic\n";
    return cli::kExitUsage;
  }
  if (*verify) return cli::cmd_verify(vopts, std::cout, std::cerr);
  if (*simulate) {
    RunConfig config;
    try {
      std::ifstream is(config_path);
      if (!is) throw ConfigError("cannot open " + config_path);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(is);
      } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(config_path + ": " + e.what());
      }
      config = parse_run_config(j);
      if (*o_rel) config.integrator.rel_tol = overrides.rel_tol;
      if (*o_abs) config.integrator.abs_tol = overrides.abs_tol;
      if (*o_h0) config.integrator.initial_step = overrides.initial_step;
      if (*o_hmax) config.integrator.max_step = overrides.max_step;
      if (*o_blow) config.integrator.blow_up_threshold = overrides.blow_up_threshold;
      if (*o_tend) config.integrator.t_end = overrides.t_end;
      if (*o_dt) config.integrator.sample_interval = overrides.sample_interval;
      if (*o_dir) config.output.directory = out_dir;
    } catch (const ConfigError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return cli::kExitUsage;
    }
    return cli::cmd_simulate(config, std::cout, std::cerr);
  }
  if (*fit) return cli::cmd_fit(csv_path, threshold, std::cout, std::cerr);
  if (*classify) return cli::cmd_classify(g2, g3, tol, std::cout, std::cerr);
  if (*wp) return cli::cmd_wp_eval(g2, g3, t, std::cout, std::cerr);
  return cli::kExitUsage;
}
