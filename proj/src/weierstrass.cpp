#include "qflow/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

namespace qflow {

PoleError::PoleError(double t)
    : std::domain_error("wp evaluated at a pole (t = " + std::to_string(t) + ")"), t_(t) {}

namespace {

constexpr int kLaurentTerms = 16;
constexpr int kMaxDoublings = 40;

double cubic(double g2, double g3, double s) { return (4 * s * s - g2) * s - g3; }

// Homogeneous size of the invariants: wp scales like length^-2, g2 like
// length^-4, g3 like length^-6.
double wp_scale(double g2, double g3) {
  return std::max(std::sqrt(std::abs(g2)), std::cbrt(std::abs(g3)));
}

double tail_integral(double g2, double e1, double x) {
  // s = e1 + u^2 removes the square-root singularity at e1, leaving
  // 2 du / sqrt(Q(e1 + u^2)) with Q(s) = 4s^2 + 4 e1 s + 4 e1^2 - g2; then
  // u = u0 + c v/(1 - v) maps [u0, inf) onto [0, 1).
  const double u0 = std::sqrt(std::max(0.0, x - e1));
  const double c = std::max({u0, std::sqrt(std::abs(e1)), std::sqrt(std::sqrt(std::abs(g2))),
                             std::numeric_limits<double>::min()});
  auto integrand = [&](double v) {
    const double w = 1 - v;
    const double u = u0 + c * v / w;
    const double s = e1 + u * u;
    const double q = 4 * s * s + 4 * e1 * s + 4 * e1 * e1 - g2;
    return 2 * c / (w * w * std::sqrt(q));
  };
  double error = 0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, 20,
                                                                      1e-14, &error);
}

}  // namespace

double largest_real_root(double g2, double g3) {
  auto f = [&](double s) { return cubic(g2, g3, s); };
  if (g2 == 0 && g3 == 0) return 0.0;
  // Fujiwara bound for s^3 - (g2/4) s - g3/4.
  const double bound =
      2.02 * std::max(std::sqrt(std::abs(g2) / 4), std::cbrt(std::abs(g3) / 8)) +
      std::numeric_limits<double>::min();
  double lo = -bound;
  double hi = bound;
  if (g2 > 0) {
    // P increases for |s| >= sc; the largest root sits right of sc unless the
    // local minimum at sc is positive.
    const double sc = std::sqrt(g2 / 12);
    if (f(sc) <= 0) {
      lo = sc;
    } else {
      hi = -sc;
    }
  }
  if (f(lo) == 0) return lo;
  if (f(hi) == 0) return hi;
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(52), max_iter);
  double root = 0.5 * (a + b);
  const double slope = 12 * root * root - g2;
  if (slope != 0) {
    const double polished = root - f(root) / slope;
    if (polished >= a && polished <= b) root = polished;
  }
  return root;
}

double wp_tail_integral(double g2, double g3, double x) {
  const double e1 = largest_real_root(g2, g3);
  if (x < e1) throw std::domain_error("wp_tail_integral: lower limit below the largest root");
  return tail_integral(g2, e1, x);
}

PeriodData real_period(double g2, double g3, double tol) {
  if (classify_lattice(g2, g3, tol) == LatticeClass::degenerate) {
    throw DegenerateLatticeError("real_period: degenerate lattice (g2^3 = 27 g3^2)");
  }
  PeriodData d;
  d.e1 = largest_real_root(g2, g3);
  d.real_half_period = tail_integral(g2, d.e1, d.e1);
  return d;
}

WeierstrassP::WeierstrassP(double g2, double g3) : WeierstrassP(g2, g3, Options{}) {}

WeierstrassP::WeierstrassP(double g2, double g3, Options opts)
    : g2_(g2), g3_(g3), opts_(opts), class_(classify_lattice(g2, g3, opts.classify_tol)) {
  if (class_ == LatticeClass::degenerate) {
    if (g2 <= 0 || wp_scale(g2, g3) == 0) {
      kind_ = Kind::zero;
      e1_ = 0;
      return;
    }
    // 4s^3 - g2 s - g3 = 4 (s - a)^2 (s + 2a) with g2 = 12 a^2, g3 = -8 a^3.
    alpha_ = -1.5 * g3 / g2;
    k_ = std::sqrt(3 * std::abs(alpha_));
    if (alpha_ > 0) {
      kind_ = Kind::hyperbolic;
      e1_ = alpha_;
    } else {
      kind_ = Kind::trigonometric;
      e1_ = -2 * alpha_;
      omega_ = std::numbers::pi / (2 * k_);
    }
    return;
  }

  e1_ = largest_real_root(g2, g3);
  omega_ = tail_integral(g2, e1_, e1_);

  laurent_.assign(kLaurentTerms + 2, 0.0);
  laurent_[2] = g2 / 20;
  laurent_[3] = g3 / 28;
  for (int k = 4; k < kLaurentTerms + 2; ++k) {
    double s = 0;
    for (int m = 2; m <= k - 2; ++m) s += laurent_[m] * laurent_[k - m];
    laurent_[k] = 3 * s / ((2 * k + 1) * (k - 3));
  }
  // Radius where the trailing terms fall below 1e-17 relative to z^-2.
  seed_radius_ = std::numeric_limits<double>::infinity();
  for (int k = kLaurentTerms - 2; k < kLaurentTerms + 2; ++k) {
    const double c = std::abs(laurent_[k]);
    if (c == 0) continue;
    seed_radius_ = std::min(seed_radius_, std::pow(1e-17 / c, 1.0 / (2 * k)));
  }
  seed_radius_ = std::min(seed_radius_, 0.5 * *omega_);
}

double WeierstrassP::residual(double x, double y) const {
  return std::abs(y * y - cubic(g2_, g3_, x));
}

WpValue WeierstrassP::laurent(double z) const {
  const double z2 = z * z;
  double x = 0;
  double y = 0;
  // Horner from the highest term.
  for (int k = kLaurentTerms + 1; k >= 2; --k) {
    x = x * z2 + laurent_[k];
    y = y * z2 + (2 * k - 2) * laurent_[k];
  }
  // x currently holds sum c_k z^(2k-4); y holds sum (2k-2) c_k z^(2k-4).
  const double wp = 1 / z2 + x * z2;
  const double wp_prime = -2 / (z2 * z) + y * z2 / z;
  return {wp, wp_prime, 0.0};
}

WpValue WeierstrassP::operator()(double t) const {
  WpValue v;
  const double pole_scale = omega_.value_or(1.0);
  double reduced = t;
  if (omega_) reduced = std::remainder(t, 2 * *omega_);
  if (std::abs(reduced) <= opts_.pole_tol * pole_scale || !std::isfinite(reduced)) {
    throw PoleError(t);
  }
  const double sign = reduced < 0 ? -1.0 : 1.0;
  const double a = std::abs(reduced);

  switch (kind_) {
    case Kind::zero:
      v.wp = 1 / (a * a);
      v.wp_prime = -2 / (a * a * a);
      break;
    case Kind::hyperbolic: {
      const double sh = std::sinh(k_ * a);
      const double ch = std::cosh(k_ * a);
      v.wp = alpha_ + 3 * alpha_ / (sh * sh);
      v.wp_prime = -6 * alpha_ * k_ * ch / (sh * sh * sh);
      break;
    }
    case Kind::trigonometric: {
      const double beta = -alpha_;
      const double sn = std::sin(k_ * a);
      const double cs = std::cos(k_ * a);
      v.wp = -beta + 3 * beta / (sn * sn);
      v.wp_prime = -6 * beta * k_ * cs / (sn * sn * sn);
      break;
    }
    case Kind::duplication: {
      int doublings = 0;
      double z = a;
      while (z > seed_radius_ && doublings < kMaxDoublings) {
        z *= 0.5;
        ++doublings;
      }
      WpValue s = laurent(z);
      double x = s.wp;
      double y = s.wp_prime;
      for (int i = 0; i < doublings; ++i) {
        const double slope = (6 * x * x - 0.5 * g2_) / y;
        const double x2 = 0.25 * slope * slope - 2 * x;
        y = slope * (x - x2) - y;
        x = x2;
      }
      v.wp = x;
      v.wp_prime = y;
      break;
    }
  }
  v.wp_prime *= sign;
  v.ode_residual = residual(v.wp, v.wp_prime);
  return v;
}

double WeierstrassP::inverse(double x) const {
  const double slack = 1e-12 * std::max(1.0, std::abs(e1_));
  if (!(x >= e1_ - slack)) {
    throw std::domain_error("WeierstrassP::inverse: value below the real range of wp");
  }
  x = std::max(x, e1_);
  switch (kind_) {
    case Kind::zero:
      if (x <= 0) throw std::domain_error("WeierstrassP::inverse: 1/t^2 needs a positive value");
      return 1 / std::sqrt(x);
    case Kind::hyperbolic:
      if (x <= alpha_) throw std::domain_error("WeierstrassP::inverse: value at the double root");
      return std::asinh(std::sqrt(3 * alpha_ / (x - alpha_))) / k_;
    case Kind::trigonometric: {
      const double beta = -alpha_;
      return std::asin(std::min(1.0, std::sqrt(3 * beta / (x + beta)))) / k_;
    }
    case Kind::duplication: return tail_integral(g2_, e1_, x);
  }
  return 0;
}

WpValue wp_eval(double g2, double g3, double t) { return WeierstrassP(g2, g3)(t); }

ShiftFit fit_shift(const Trajectory& traj, const FitOptions& opts) {
  const auto& samples = traj.samples;
  if (samples.size() < opts.min_samples) {
    throw FitError("fit_shift: insufficient samples (" + std::to_string(samples.size()) + " < " +
                   std::to_string(opts.min_samples) + ")");
  }
  if (!traj.params) throw FitError("fit_shift: trajectory carries no elliptic parameters");

  WeierstrassP::Options wopts;
  wopts.classify_tol = opts.classify_tol;
  const WeierstrassP wp(traj.params->g2, traj.params->g3, wopts);

  const double floor = wp.minimum() - opts.branch_tol * std::max(1.0, std::abs(wp.minimum()));
  for (const auto& s : samples) {
    if (!std::isfinite(s.F) || !std::isfinite(s.Fdot)) {
      throw FitError("fit_shift: non-finite F channel at t = " + std::to_string(s.t));
    }
    if (s.F < floor) {
      throw FitError("fit_shift: F leaves the real branch of wp (F = " + std::to_string(s.F) +
                     " < e1 = " + std::to_string(wp.minimum()) + ")");
    }
  }

  // Inversion is ill-conditioned near turning points (Fdot = 0). Take the
  // earliest sample whose normalized slope is within a factor 4 of the best.
  auto weight = [](const TrajectorySample& s) {
    return std::abs(s.Fdot) / std::pow(1 + std::abs(s.F), 1.5);
  };
  double best = 0;
  for (const auto& s : samples) best = std::max(best, weight(s));
  std::size_t ref = 0;
  while (ref + 1 < samples.size() && weight(samples[ref]) < 0.25 * best) ++ref;

  const TrajectorySample& r = samples[ref];
  double tau = 0;
  try {
    tau = wp.inverse(r.F);
  } catch (const std::domain_error& e) {
    throw FitError(std::string("fit_shift: ") + e.what());
  }

  ShiftFit fit;
  fit.reference_index = ref;
  fit.lattice_class = wp.lattice_class();
  fit.closed_form = wp.closed_form();
  fit.t0 = r.Fdot < 0 ? r.t - tau : r.t + tau;
  for (const auto& s : samples) {
    double value = 0;
    try {
      value = wp(s.t - fit.t0).wp;
    } catch (const PoleError&) {
      throw FitError("fit_shift: sample at t = " + std::to_string(s.t) +
                     " coincides with a pole of the fitted wp");
    }
    const double res = std::abs(s.F - value) / std::max(1.0, std::abs(s.F));
    fit.max_residual = std::max(fit.max_residual, res);
  }
  return fit;
}

double check_disc_relation_numeric(const HamiltonianSpec& h, const PhaseState& s0) {
  if (h.is_cubic()) throw DegreeError("check_disc_relation_numeric needs a quartic Hamiltonian");
  const double psi0 = evaluate(psi_form(h), s0.p, s0.q);
  const EllipticParams<double> g = g_constants(h, psi0);
  const InvariantSet inv = invariants(h.quartic());
  const double lhs = g.weierstrass_disc;
  const double rhs = to_double(*inv.disc) * std::pow(16 * psi0, 6);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == 0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

}  // namespace qflow
