#include "qflow/hamilton_flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dormand_prince.hpp"

namespace qflow {

std::string_view to_string(FlowStatus s) {
  switch (s) {
    case FlowStatus::completed: return "completed";
    case FlowStatus::blew_up: return "blew_up";
    case FlowStatus::step_failure: return "step_failure";
  }
  return "unknown";
}

std::optional<FlowStatus> flow_status_from_string(std::string_view name) {
  for (auto s : {FlowStatus::completed, FlowStatus::blew_up, FlowStatus::step_failure}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

void IntegratorConfig::validate() const {
  auto require = [](bool ok, const char* field, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("integrator.") + field + " " + what);
  };
  require(std::isfinite(rel_tol) && rel_tol > 0, "rel_tol", "must be positive");
  require(std::isfinite(abs_tol) && abs_tol > 0, "abs_tol", "must be positive");
  require(std::isfinite(initial_step) && initial_step > 0, "initial_step", "must be positive");
  require(std::isfinite(max_step) && max_step > 0, "max_step", "must be positive");
  require(blow_up_threshold > 0, "blow_up_threshold", "must be positive");
  require(std::isfinite(t_end), "t_end", "must be finite");
  require(std::isfinite(sample_interval) && sample_interval > 0, "sample_interval",
          "must be positive");
}

Hamiltonian::Hamiltonian(const HamiltonianSpec& spec) : Hamiltonian({psi_form(spec)}) {
  spec_ = spec;
  const BinaryForm f = covariant_F(spec);
  F_ = NumericForm(f);
  Fdot_ = NumericForm(poisson_bracket(psi_form(spec), f));
  g2_ = NumericForm(g2_form(spec));
  g3_ = NumericForm(g3_form(spec));
}

Hamiltonian::Hamiltonian(std::vector<BinaryForm> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    psi_.emplace_back(c);
    if (c.degree() >= 1) {
      psi_p_.emplace_back(partial_p(c));
      psi_q_.emplace_back(partial_q(c));
    }
  }
}

Hamiltonian Hamiltonian::reversed() const {
  std::vector<BinaryForm> negated;
  negated.reserve(components_.size());
  for (const auto& c : components_) negated.push_back(-c);
  Hamiltonian r(std::move(negated));
  // The covariant channels of the reversed flow are those of the original
  // Hamiltonian evaluated along it, with Fdot changing sign.
  if (spec_) {
    r.spec_ = spec_;
    r.F_ = F_;
    r.g2_ = g2_;
    r.g3_ = g3_;
    r.orientation_ = -orientation_;
    r.Fdot_ = NumericForm(-poisson_bracket(psi_form(*spec_), covariant_F(*spec_)));
  }
  return r;
}

double Hamiltonian::psi(double p, double q) const {
  double s = 0;
  for (const auto& c : psi_) s += c(p, q);
  return s;
}

std::array<double, 2> Hamiltonian::rhs(double p, double q) const {
  double dp = 0;
  double dq = 0;
  for (const auto& c : psi_q_) dp -= c(p, q);
  for (const auto& c : psi_p_) dq += c(p, q);
  return {dp, dq};
}

std::array<double, 2> hamilton_rhs(const Hamiltonian& h, const PhaseState& s) {
  return h.rhs(s.p, s.q);
}

std::array<double, 2> hamilton_rhs(const HamiltonianSpec& h, const PhaseState& s) {
  return hamilton_rhs(Hamiltonian(h), s);
}

namespace {

TrajectorySample make_sample(const Hamiltonian& h, double t, double p, double q) {
  TrajectorySample s{t, p, q, h.psi(p, q), 0.0, 0.0};
  if (h.has_covariants()) {
    s.F = h.F(p, q);
    s.Fdot = h.Fdot(p, q);
  } else {
    s.F = std::numeric_limits<double>::quiet_NaN();
    s.Fdot = std::numeric_limits<double>::quiet_NaN();
  }
  return s;
}

bool in_bounds(const detail::Vec<2>& y, double threshold) {
  return std::isfinite(y[0]) && std::isfinite(y[1]) &&
         std::max(std::abs(y[0]), std::abs(y[1])) <= threshold;
}

constexpr std::size_t kMaxSteps = 50'000'000;

// Step-size underflow next to a pole: the local time scale |y|/|y'| has
// collapsed far below the clock resolution. Quartic poles grow only like
// (t* - t)^(-1/2), so they exhaust double precision in t long before a
// magnitude threshold such as 1e8 is reached.
bool near_singularity(const detail::Vec<2>& y, const detail::Vec<2>& dy, double t) {
  const double speed = std::hypot(dy[0], dy[1]);
  if (!std::isfinite(speed)) return true;
  const double scale = std::hypot(y[0], y[1]);
  const double resolution = std::sqrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(t));
  return speed > 0 && scale > 1 && scale < resolution * speed;
}

}  // namespace

Trajectory integrate(const Hamiltonian& h, const PhaseState& s0, const IntegratorConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(s0.t) || !std::isfinite(s0.p) || !std::isfinite(s0.q)) {
    throw std::invalid_argument("integrate: initial state must be finite");
  }
  if (cfg.t_end < s0.t) throw std::invalid_argument("integrate: t_end precedes the initial time");

  Trajectory traj;
  if (h.has_covariants()) traj.params = g_constants(*h.spec(), h.spec_psi(s0.p, s0.q));
  traj.last_good = s0;

  const auto f = [&h](const detail::Vec<2>& y) { return h.rhs(y[0], y[1]); };

  const double span = cfg.t_end - s0.t;
  // Uniform grid; t_end closes the grid, either snapped onto the last grid
  // point or appended after it.
  auto n_samples = static_cast<std::size_t>(std::floor(span / cfg.sample_interval + 1e-9));
  if (std::abs(s0.t + static_cast<double>(n_samples) * cfg.sample_interval - cfg.t_end) >
      1e-9 * cfg.sample_interval) {
    ++n_samples;
  }
  auto sample_time = [&](std::size_t k) {
    if (k == n_samples) return cfg.t_end;
    return s0.t + static_cast<double>(k) * cfg.sample_interval;
  };

  if (!in_bounds({s0.p, s0.q}, cfg.blow_up_threshold)) {
    traj.status = FlowStatus::blew_up;
    return traj;
  }
  traj.samples.push_back(make_sample(h, s0.t, s0.p, s0.q));
  std::size_t next_sample = 1;

  detail::DormandPrinceStep<2> step;
  step.t0 = s0.t;
  step.y0 = {s0.p, s0.q};
  step.k[0] = f(step.y0);
  double t = s0.t;
  double dt = std::min(cfg.initial_step, cfg.max_step);
  bool last_rejected = false;
  auto underflow_status = [&] {
    return near_singularity(step.y0, step.k[0], t) ? FlowStatus::blew_up : FlowStatus::step_failure;
  };

  while (t < cfg.t_end) {
    if (traj.accepted_steps + traj.rejected_steps >= kMaxSteps) {
      traj.status = FlowStatus::step_failure;
      break;
    }
    const bool final_step = dt >= cfg.t_end - t;
    if (final_step) dt = cfg.t_end - t;
    const double min_step = 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
    if (dt < min_step && !final_step) {
      traj.status = underflow_status();
      break;
    }

    step.t0 = t;
    step.h = dt;
    step.attempt(f, cfg.rel_tol, cfg.abs_tol);
    const double err = step.error_norm;
    if (!std::isfinite(err) || err > 1.0) {
      ++traj.rejected_steps;
      const double factor = std::isfinite(err) ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.2;
      dt *= factor;
      last_rejected = true;
      if (final_step && dt < min_step) {
        traj.status = underflow_status();
        break;
      }
      continue;
    }

    ++traj.accepted_steps;
    const double t_new = final_step ? cfg.t_end : t + dt;
    bool blew_up = false;
    while (next_sample <= n_samples && sample_time(next_sample) <= t_new) {
      const double ts = sample_time(next_sample);
      const detail::Vec<2> y = ts == t_new ? step.y1 : step.interpolate(ts);
      if (!in_bounds(y, cfg.blow_up_threshold)) {
        blew_up = true;
        break;
      }
      traj.samples.push_back(make_sample(h, ts, y[0], y[1]));
      ++next_sample;
    }
    if (blew_up || !in_bounds(step.y1, cfg.blow_up_threshold)) {
      traj.status = FlowStatus::blew_up;
      break;
    }

    t = t_new;
    step.y0 = step.y1;
    step.k[0] = step.k[6];
    traj.last_good = {t, step.y0[0], step.y0[1]};

    double factor = err == 0 ? 10.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 10.0);
    if (last_rejected) factor = std::min(factor, 1.0);
    last_rejected = false;
    dt = std::min(dt * factor, cfg.max_step);
  }
  return traj;
}

Trajectory integrate(const HamiltonianSpec& h, const PhaseState& s0, const IntegratorConfig& cfg) {
  return integrate(Hamiltonian(h), s0, cfg);
}

namespace {

double drift(double value, double initial) {
  const double d = std::abs(value - initial);
  return initial == 0 ? d : d / std::abs(initial);
}

}  // namespace

DriftReport drift_report(const Trajectory& traj, const Hamiltonian& h) {
  if (traj.samples.empty()) throw std::invalid_argument("drift_report: empty trajectory");
  DriftReport r;
  const TrajectorySample& first = traj.samples.front();
  const double g2_0 = h.has_covariants() ? h.g2(first.p, first.q) : 0.0;
  const double g3_0 = h.has_covariants() ? h.g3(first.p, first.q) : 0.0;
  for (const auto& s : traj.samples) {
    r.max_rel_drift_psi = std::max(r.max_rel_drift_psi, drift(s.psi, first.psi));
    if (!h.has_covariants()) continue;
    r.max_rel_drift_g2 = std::max(r.max_rel_drift_g2, drift(h.g2(s.p, s.q), g2_0));
    r.max_rel_drift_g3 = std::max(r.max_rel_drift_g3, drift(h.g3(s.p, s.q), g3_0));
    const double res = s.Fdot * s.Fdot - 4 * s.F * s.F * s.F + g2_0 * s.F + g3_0;
    const double scale = std::max(1.0, std::abs(s.F * s.F * s.F));
    r.max_abs_residual_weierstrass_ode =
        std::max(r.max_abs_residual_weierstrass_ode, std::abs(res) / scale);
  }
  return r;
}

DriftReport drift_report(const Trajectory& traj, const HamiltonianSpec& h) {
  return drift_report(traj, Hamiltonian(h));
}

}  // namespace qflow
