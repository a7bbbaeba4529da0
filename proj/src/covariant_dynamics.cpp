#include "qflow/covariant_dynamics.hpp"

namespace qflow {

BinaryForm u_form(const HamiltonianSpec& h) {
  return h.is_cubic() ? make_cubic(h.cubic()) : make_quartic(h.quartic());
}

BinaryForm psi_form(const HamiltonianSpec& h) {
  return u_form(h) / Rational(h.degree());
}

BinaryForm covariant_F(const HamiltonianSpec& h) {
  if (h.is_cubic()) return -hessian_cubic(h.cubic());
  return Rational(-4) * hessian_quartic(h.quartic());
}

BinaryForm covariant_Fdot(const HamiltonianSpec& h) {
  return poisson_bracket(psi_form(h), covariant_F(h));
}

BinaryForm g2_form(const HamiltonianSpec& h) {
  if (h.is_cubic()) return BinaryForm::zero(4);
  const BinaryForm sixteen_psi = Rational(16) * psi_form(h);
  return invariant_S(h.quartic()) * power(sixteen_psi, 2);
}

BinaryForm g3_form(const HamiltonianSpec& h) {
  if (h.is_cubic()) {
    return -discriminant_cubic(h.cubic()) * power(u_form(h), 2);
  }
  const BinaryForm sixteen_psi = Rational(16) * psi_form(h);
  return invariant_T(h.quartic()) * power(sixteen_psi, 3);
}

EllipticParams<Rational> g_constants(const HamiltonianSpec& h, const Rational& psi0) {
  if (h.is_cubic()) {
    const Rational u = 3 * psi0;
    return make_elliptic_params(Rational(0), Rational(-discriminant_cubic(h.cubic()) * u * u));
  }
  const Rational u = 16 * psi0;
  return make_elliptic_params(Rational(invariant_S(h.quartic()) * u * u),
                              Rational(invariant_T(h.quartic()) * u * u * u));
}

EllipticParams<double> g_constants(const HamiltonianSpec& h, double psi0, double tol) {
  if (h.is_cubic()) {
    const double u = 3 * psi0;
    return make_elliptic_params(0.0, -to_double(discriminant_cubic(h.cubic())) * u * u, tol);
  }
  const double u = 16 * psi0;
  return make_elliptic_params(to_double(invariant_S(h.quartic())) * u * u,
                              to_double(invariant_T(h.quartic())) * u * u * u, tol);
}

Rational vector_ode_factor(const HamiltonianSpec& h) {
  return h.is_cubic() ? Rational(2) : Rational(3, 4);
}

std::pair<BinaryForm, BinaryForm> verify_vector_ode(const HamiltonianSpec& h) {
  const BinaryForm psi = psi_form(h);
  const BinaryForm lambda_f = vector_ode_factor(h) * covariant_F(h);
  const BinaryForm p = BinaryForm::p();
  const BinaryForm q = BinaryForm::q();
  const BinaryForm p_ddot = poisson_bracket(psi, poisson_bracket(psi, p));
  const BinaryForm q_ddot = poisson_bracket(psi, poisson_bracket(psi, q));
  return {p_ddot - lambda_f * p, q_ddot - lambda_f * q};
}

std::pair<BinaryForm, BinaryForm> verify_scalar_odes(const HamiltonianSpec& h) {
  const BinaryForm psi = psi_form(h);
  const BinaryForm f = covariant_F(h);
  const BinaryForm f_dot = poisson_bracket(psi, f);
  const BinaryForm f_ddot = poisson_bracket(psi, f_dot);
  const BinaryForm f2 = power(f, 2);
  const BinaryForm f3 = f2 * f;
  if (h.is_cubic()) {
    const Rational d = discriminant_cubic(h.cubic());
    return {f_ddot - Rational(6) * f2,
            power(f_dot, 2) - Rational(4) * f3 - d * power(u_form(h), 2)};
  }
  const BinaryForm g2 = g2_form(h);
  const BinaryForm g3 = g3_form(h);
  return {f_ddot - Rational(6) * f2 + g2 / Rational(2),
          power(f_dot, 2) - Rational(4) * f3 + g2 * f + g3};
}

BinaryForm verify_Fdot_is_minus_J(const HamiltonianSpec& h) {
  const BinaryForm f_dot = covariant_Fdot(h);
  if (h.is_cubic()) return f_dot + jacobian_cubic(h.cubic());
  return f_dot + Rational(8) * jacobian_quartic(h.quartic());
}

BinaryForm quartic_disc_relation(const HamiltonianSpec& h) {
  if (h.is_cubic()) throw DegreeError("quartic_disc_relation needs a quartic Hamiltonian");
  const BinaryForm g2 = g2_form(h);
  const BinaryForm g3 = g3_form(h);
  const InvariantSet inv = invariants(h.quartic());
  const BinaryForm sixteen_psi = Rational(16) * psi_form(h);
  return power(g2, 3) - Rational(27) * power(g3, 2) - *inv.disc * power(sixteen_psi, 6);
}

}  // namespace qflow
