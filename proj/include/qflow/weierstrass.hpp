#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qflow/covariant_dynamics.hpp"
#include "qflow/hamilton_flow.hpp"
#include "qflow/lattice.hpp"

namespace qflow {

struct WpValue {
  double wp = 0;
  double wp_prime = 0;
  /// |wp'^2 - (4 wp^3 - g2 wp - g3)|, carried as a quality metric.
  double ode_residual = 0;
};

struct PeriodData {
  double e1 = 0;                // largest real root of 4s^3 - g2 s - g3
  double real_half_period = 0;  // omega; wp has real period 2 omega
  bool degenerate = false;
};

struct ShiftFit {
  double t0 = 0;
  /// max over samples of |F(t) - wp(t - t0)| / max(1, |F(t)|).
  double max_residual = 0;
  std::size_t reference_index = 0;
  LatticeClass lattice_class = LatticeClass::general;
  /// The degenerate closed forms were used instead of duplication.
  bool closed_form = false;
};

class PoleError : public std::domain_error {
 public:
  explicit PoleError(double t);
  double t() const { return t_; }

 private:
  double t_;
};

class DegenerateLatticeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest real root of 4s^3 - g2 s - g3 (bracketed, then polished).
double largest_real_root(double g2, double g3);

/// Integral of ds / sqrt(4s^3 - g2 s - g3) over [x, inf), for x >= e1. This
/// is the tau in (0, omega] with wp(tau) = x on the decreasing branch.
double wp_tail_integral(double g2, double g3, double x);

/// Throws DegenerateLatticeError when g2^3 - 27 g3^2 vanishes (relative tol).
PeriodData real_period(double g2, double g3, double tol = 1e-12);

/// Weierstrass wp on the real axis for fixed (g2, g3).
///
/// Non-degenerate lattices: the argument is reduced modulo the real period,
/// wp is seeded from its Laurent series near the origin and brought back out
/// by repeated duplication,
///   wp(2z) = (wp''/wp')^2 / 4 - 2 wp(z),   wp'' = 6 wp^2 - g2/2.
/// Degenerate lattices (g2^3 = 27 g3^2) use the closed forms 1/t^2,
/// a + 3a/sinh^2(sqrt(3a) t) and -b + 3b/sin^2(sqrt(3b) t).
class WeierstrassP {
 public:
  struct Options {
    double classify_tol = 1e-12;
    /// Arguments closer than pole_tol * (half period, or 1) to a pole throw.
    double pole_tol = 1e-12;
  };

  WeierstrassP(double g2, double g3);
  WeierstrassP(double g2, double g3, Options opts);

  double g2() const { return g2_; }
  double g3() const { return g3_; }
  LatticeClass lattice_class() const { return class_; }
  bool closed_form() const { return kind_ != Kind::duplication; }
  /// Half of the real period, if wp is periodic on the real axis.
  std::optional<double> real_half_period() const { return omega_; }
  /// Minimum of wp on the real axis (e1; the double root in the hyperbolic
  /// degenerate case, which is approached but not attained).
  double minimum() const { return e1_; }

  WpValue operator()(double t) const;

  /// tau in (0, omega] with wp(tau) = x and wp'(tau) <= 0. Requires x >= e1.
  double inverse(double x) const;

 private:
  enum class Kind { duplication, zero, hyperbolic, trigonometric };

  WpValue laurent(double z) const;
  double residual(double x, double y) const;

  double g2_;
  double g3_;
  Options opts_;
  LatticeClass class_;
  Kind kind_ = Kind::duplication;
  double e1_ = 0;
  std::optional<double> omega_;
  double alpha_ = 0;  // double root for degenerate lattices
  double k_ = 0;      // sqrt(3 |alpha|)
  double seed_radius_ = 0;
  std::vector<double> laurent_;  // c_k for k = 2.., wp = z^-2 + sum c_k z^(2k-2)
};

/// Convenience wrapper; builds a WeierstrassP per call.
WpValue wp_eval(double g2, double g3, double t);

struct FitOptions {
  std::size_t min_samples = 10;
  double classify_tol = 1e-12;
  /// Relative slack below e1 tolerated before declaring the F-range outside
  /// the real branch of wp.
  double branch_tol = 1e-6;
};

/// Certifies F(t) = wp(t - t0) on a trajectory: t0 from one reference sample
/// by inverting wp, then the residual over all samples.
ShiftFit fit_shift(const Trajectory& traj, const FitOptions& opts = {});

/// Relative residual of g2^3 - 27 g3^2 = (S^3 - 27 T^2)(16 psi0)^6 at s0.
/// Throws DegreeError for cubic Hamiltonians.
double check_disc_relation_numeric(const HamiltonianSpec& h, const PhaseState& s0);

}  // namespace qflow
