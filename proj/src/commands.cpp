#include "qflow/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "qflow/classical_covariants.hpp"
#include "qflow/hamilton_flow.hpp"
#include "qflow/trajectory_io.hpp"
#include "qflow/weierstrass.hpp"

namespace qflow::cli {

using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

json coeff_json(const BinaryForm& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(to_string(c));
  return a;
}

std::string coeff_list(const BinaryForm& f) {
  std::string s = "[";
  for (int k = 0; k <= f.degree(); ++k) {
    if (k) s += ", ";
    s += to_string(f.coeff(k));
  }
  return s + "]";
}

}  // namespace

std::vector<Rational> parse_coefficients(const std::vector<std::string>& args) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    try {
      out.push_back(parse_rational(args[i]));
    } catch (const ParseError& e) {
      throw ParseError("coefficient " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

int cmd_invariants(const std::vector<std::string>& coeffs, int degree, std::ostream& out,
                   std::ostream& err) {
  const std::size_t want = degree == 3 ? 4 : 5;
  if ((degree != 3 && degree != 4) || coeffs.size() != want) {
    err << "error: " << (degree == 3 ? "--cubic" : "--quartic") << " expects " << want
        << " coefficients, got " << coeffs.size() << "\n";
    return kExitUsage;
  }
  std::vector<Rational> c;
  try {
    c = parse_coefficients(coeffs);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  json j;
  j["degree"] = degree;
  if (degree == 3) {
    const CubicCoeffs cc{c[0], c[1], c[2], c[3]};
    const BinaryForm h = hessian_cubic(cc);
    const BinaryForm jac = jacobian_cubic(cc);
    const Rational d = discriminant_cubic(cc);
    out << "U = " << to_string(make_cubic(cc)) << "\n";
    out << "D = " << to_string(d) << "\n";
    out << "H = " << to_string(h) << "  " << coeff_list(h) << "\n";
    out << "J = " << to_string(jac) << "  " << coeff_list(jac) << "\n";
    j["invariants"] = {{"D", to_string(d)}};
    j["hessian"] = coeff_json(h);
    j["jacobian"] = coeff_json(jac);
  } else {
    const QuarticCoeffs qc{c[0], c[1], c[2], c[3], c[4]};
    const InvariantSet inv = invariants(qc);
    const BinaryForm h = hessian_quartic(qc);
    const BinaryForm jac = jacobian_quartic(qc);
    out << "U = " << to_string(make_quartic(qc)) << "\n";
    out << "S = " << to_string(*inv.S) << "\n";
    out << "T = " << to_string(*inv.T) << "\n";
    out << "S^3 - 27 T^2 = " << to_string(*inv.disc) << "\n";
    out << "H = " << to_string(h) << "  " << coeff_list(h) << "\n";
    out << "J = " << to_string(jac) << "  " << coeff_list(jac) << "\n";
    j["invariants"] = {
        {"S", to_string(*inv.S)}, {"T", to_string(*inv.T)}, {"disc", to_string(*inv.disc)}};
    j["hessian"] = coeff_json(h);
    j["jacobian"] = coeff_json(jac);
  }
  out << j.dump() << "\n";
  return kExitOk;
}

std::vector<HamiltonianSpec> random_hamiltonians(int degree, int trials, std::uint64_t seed,
                                                 int range) {
  if (degree != 3 && degree != 4) {
    throw std::invalid_argument("unsupported degree " + std::to_string(degree) +
                                " (only 3 and 4 have invariant theory here)");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-range, range);
  std::vector<HamiltonianSpec> out;
  out.reserve(static_cast<std::size_t>(std::max(trials, 0)));
  for (int i = 0; i < trials; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) c.emplace_back(dist(rng));
    if (degree == 3) {
      out.push_back({CubicCoeffs{c[0], c[1], c[2], c[3]}});
    } else {
      out.push_back({QuarticCoeffs{c[0], c[1], c[2], c[3], c[4]}});
    }
  }
  return out;
}

std::vector<std::pair<std::string, bool>> check_identities(const HamiltonianSpec& h) {
  std::vector<std::pair<std::string, bool>> r;
  const BinaryForm psi = psi_form(h);
  if (h.is_cubic()) {
    const CubicCoeffs& c = h.cubic();
    r.emplace_back("cayley_syzygy", check_syzygy_cubic(c).is_zero());
    const BinaryForm u = make_cubic(c);
    r.emplace_back("jacobian_determinant",
                   (jacobian_cubic(c) - poisson_bracket(u, hessian_cubic(c)) / Rational(3)).is_zero());
    r.emplace_back("hessian_is_minus_F", (hessian_cubic(c) + covariant_F(h)).is_zero());
  } else {
    const QuarticCoeffs& c = h.quartic();
    r.emplace_back("quartic_syzygy", check_syzygy_quartic(c).is_zero());
    r.emplace_back("hessian_is_minus_F_over_4",
                   (Rational(4) * hessian_quartic(c) + covariant_F(h)).is_zero());
    r.emplace_back("disc_relation", quartic_disc_relation(h).is_zero());
  }
  const auto [vp, vq] = verify_vector_ode(h);
  r.emplace_back("vector_ode", vp.is_zero() && vq.is_zero());
  const auto [second, first] = verify_scalar_odes(h);
  r.emplace_back("scalar_ode_second_order", second.is_zero());
  r.emplace_back("scalar_ode_first_order", first.is_zero());
  r.emplace_back(h.is_cubic() ? "Fdot_is_minus_J" : "Fdot_is_minus_8J",
                 verify_Fdot_is_minus_J(h).is_zero());
  r.emplace_back("constants_of_motion", poisson_bracket(psi, psi).is_zero() &&
                                            poisson_bracket(psi, g2_form(h)).is_zero() &&
                                            poisson_bracket(psi, g3_form(h)).is_zero());
  return r;
}

VerifySummary run_verify(const VerifyOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const auto hams = random_hamiltonians(opts.degree, opts.trials, opts.seed, opts.range);
  std::vector<std::vector<std::pair<std::string, bool>>> results(hams.size());

  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(hams.size()));
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < hams.size(); i += jobs) results[i] = check_identities(hams[i]);
      });
    }
  }

  VerifySummary s;
  s.degree = opts.degree;
  s.trials = opts.trials;
  for (const auto& [name, ok] : results.front()) s.identities.push_back({name, 0});
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t k = 0; k < results[i].size(); ++k) {
      if (results[i][k].second) {
        ++s.identities[k].passed;
      } else if (!s.first_failure_trial) {
        s.first_failure_trial = static_cast<int>(i);
        s.first_failure_identity = results[i][k].first;
        s.first_failure_coeffs = config_of(hams[i]).coefficients;
      }
    }
  }
  return s;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  VerifySummary s;
  try {
    s = run_verify(opts);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out << "verify degree " << s.degree << ", " << s.trials << " trials, seed " << opts.seed
      << "\n";
  for (const auto& id : s.identities) {
    out << "  " << id.name << ": " << id.passed << "/" << s.trials << "\n";
  }
  if (!s.all_passed()) {
    err << "FAILED: " << *s.first_failure_identity << " at trial " << *s.first_failure_trial
        << ", coefficients";
    for (const auto& c : s.first_failure_coeffs) err << " " << to_string(c);
    err << "\n";
    return kExitCheckFailed;
  }
  out << "all identities hold exactly\n";
  return kExitOk;
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Trajectory traj;
  DriftReport drift;
  try {
    const Hamiltonian h = build_hamiltonian(config.hamiltonian);
    traj = integrate(h, PhaseState{0.0, config.p0, config.q0}, config.integrator);
    drift = traj.samples.empty() ? DriftReport{} : drift_report(traj, h);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  TrajectoryFiles files;
  try {
    files = write_trajectory_files(config, traj, drift);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  out << "status: " << to_string(traj.status) << "\n";
  out << "samples: " << traj.samples.size() << " (accepted steps " << traj.accepted_steps
      << ", rejected " << traj.rejected_steps << ")\n";
  out << "last good state: t=" << fmt(traj.last_good.t) << " p=" << fmt(traj.last_good.p)
      << " q=" << fmt(traj.last_good.q) << "\n";
  if (traj.params) {
    out << "g2 = " << fmt(traj.params->g2) << ", g3 = " << fmt(traj.params->g3)
        << ", g2^3 - 27 g3^2 = " << fmt(traj.params->weierstrass_disc)
        << ", lattice: " << to_string(traj.params->lattice_class) << "\n";
  }
  out << "drift: psi " << fmt(drift.max_rel_drift_psi) << ", g2 " << fmt(drift.max_rel_drift_g2)
      << ", g3 " << fmt(drift.max_rel_drift_g3) << ", weierstrass ode residual "
      << fmt(drift.max_abs_residual_weierstrass_ode) << "\n";
  if (!files.csv.empty()) out << "wrote " << files.csv.string() << "\n";
  if (!files.json.empty()) out << "wrote " << files.json.string() << "\n";

  if (traj.params) {
    try {
      const ShiftFit fit = fit_shift(quantize(traj));
      out << "fit: t0 = " << fmt(fit.t0) << ", max residual = " << fmt(fit.max_residual) << "\n";
    } catch (const FitError& e) {
      out << "fit: not available (" << e.what() << ")\n";
    }
  }

  switch (traj.status) {
    case FlowStatus::completed: return kExitOk;
    case FlowStatus::blew_up: return kExitBlowUp;
    case FlowStatus::step_failure: return kExitStepFailure;
  }
  return kExitOk;
}

int cmd_fit(const std::filesystem::path& csv, double threshold, std::ostream& out,
            std::ostream& err) {
  Trajectory traj;
  ShiftFit fit;
  try {
    traj = read_trajectory_files(csv);
    fit = fit_shift(traj);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out << "t0 = " << fmt(fit.t0) << "\n";
  out << "max residual = " << fmt(fit.max_residual) << "\n";
  out << "lattice: " << to_string(fit.lattice_class) << "\n";
  out << "reference sample: " << fit.reference_index << "\n";
  if (fit.closed_form) out << "note: degenerate lattice, closed-form wp used\n";
  if (fit.max_residual <= threshold) {
    out << "certificate: PASS (threshold " << fmt(threshold) << ")\n";
    return kExitOk;
  }
  out << "certificate: FAIL (threshold " << fmt(threshold) << ")\n";
  return kExitCheckFailed;
}

int cmd_classify(double g2, double g3, double tol, std::ostream& out, std::ostream& err) {
  if (!(tol > 0)) {
    err << "error: --tol must be positive\n";
    return kExitUsage;
  }
  out << to_string(classify_lattice(g2, g3, tol)) << "\n";
  out << "g2^3 - 27 g3^2 = " << fmt(g2 * g2 * g2 - 27 * g3 * g3) << "\n";
  return kExitOk;
}

int cmd_wp_eval(double g2, double g3, double t, std::ostream& out, std::ostream& err) {
  try {
    const WeierstrassP wp(g2, g3);
    const WpValue v = wp(t);
    out << "wp = " << fmt(v.wp) << "\n";
    out << "wp' = " << fmt(v.wp_prime) << "\n";
    out << "ode residual = " << fmt(v.ode_residual) << "\n";
    if (wp.real_half_period()) out << "real half period = " << fmt(*wp.real_half_period()) << "\n";
    out << "lattice: " << to_string(wp.lattice_class()) << "\n";
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace qflow::cli
