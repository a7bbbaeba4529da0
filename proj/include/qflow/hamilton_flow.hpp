#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qflow/binary_form.hpp"
#include "qflow/covariant_dynamics.hpp"
#include "qflow/lattice.hpp"

namespace qflow {

struct PhaseState {
  double t = 0;
  double p = 0;
  double q = 0;
};

/// One uniform-grid sample with the derived channels. F and Fdot come from
/// the exact covariant polynomials evaluated at (p, q).
struct TrajectorySample {
  double t = 0;
  double p = 0;
  double q = 0;
  double psi = 0;
  double F = 0;
  double Fdot = 0;
};

enum class FlowStatus { completed, blew_up, step_failure };

std::string_view to_string(FlowStatus s);
std::optional<FlowStatus> flow_status_from_string(std::string_view name);

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double initial_step = 1e-3;
  double max_step = 0.1;
  double blow_up_threshold = 1e8;  // on max(|p|, |q|)
  double t_end = 1.0;
  double sample_interval = 1e-2;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  /// Fixed from the initial state; empty for Hamiltonians without covariants.
  std::optional<EllipticParams<double>> params;
  FlowStatus status = FlowStatus::completed;
  /// Last accepted integrator state inside the blow-up threshold.
  PhaseState last_good;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
};

struct DriftReport {
  double max_rel_drift_psi = 0;
  double max_rel_drift_g2 = 0;
  double max_rel_drift_g3 = 0;
  /// max over samples of |Fdot^2 - 4F^3 + g2 F + g3| / max(1, |F|^3).
  double max_abs_residual_weierstrass_ode = 0;
};

/// A polynomial Hamiltonian in (p, q), stored as homogeneous components.
/// Built from a HamiltonianSpec it also carries the covariant channels; built
/// from bare components (e.g. the harmonic oscillator (p^2 + q^2)/2) it only
/// drives the flow.
class Hamiltonian {
 public:
  explicit Hamiltonian(const HamiltonianSpec& spec);
  explicit Hamiltonian(std::vector<BinaryForm> components);

  /// The time-reversed flow, generated by -psi.
  Hamiltonian reversed() const;

  double psi(double p, double q) const;
  /// (dp/dt, dq/dt) = (-psi_q, psi_p).
  std::array<double, 2> rhs(double p, double q) const;

  /// psi of the originating HamiltonianSpec (differs in sign from psi() on a
  /// reversed Hamiltonian).
  double spec_psi(double p, double q) const { return orientation_ * psi(p, q); }

  bool has_covariants() const { return spec_.has_value(); }
  const std::optional<HamiltonianSpec>& spec() const { return spec_; }
  double F(double p, double q) const { return F_(p, q); }
  double Fdot(double p, double q) const { return Fdot_(p, q); }
  double g2(double p, double q) const { return g2_(p, q); }
  double g3(double p, double q) const { return g3_(p, q); }

 private:
  std::vector<BinaryForm> components_;
  double orientation_ = 1.0;
  std::optional<HamiltonianSpec> spec_;
  std::vector<NumericForm> psi_;
  std::vector<NumericForm> psi_p_;
  std::vector<NumericForm> psi_q_;
  NumericForm F_;
  NumericForm Fdot_;
  NumericForm g2_;
  NumericForm g3_;
};

/// (dp, dq) = (-psi_q(p, q), psi_p(p, q)).
std::array<double, 2> hamilton_rhs(const HamiltonianSpec& h, const PhaseState& s);
std::array<double, 2> hamilton_rhs(const Hamiltonian& h, const PhaseState& s);

/// Adaptive Dormand-Prince 5(4) integration from s0 to cfg.t_end, sampling at
/// s0.t + k * cfg.sample_interval via the continuous extension. Blow-up and
/// step-size underflow end the run early and are reported in the status.
Trajectory integrate(const Hamiltonian& h, const PhaseState& s0, const IntegratorConfig& cfg);
Trajectory integrate(const HamiltonianSpec& h, const PhaseState& s0, const IntegratorConfig& cfg);

/// Drifts relative to the first sample (absolute when that value is 0).
/// Throws std::invalid_argument on an empty trajectory.
DriftReport drift_report(const Trajectory& traj, const Hamiltonian& h);
DriftReport drift_report(const Trajectory& traj, const HamiltonianSpec& h);

}  // namespace qflow
