#pragma once

#include <utility>
#include <variant>

#include "qflow/binary_form.hpp"
#include "qflow/classical_covariants.hpp"
#include "qflow/lattice.hpp"

namespace qflow {

/// Homogeneous cubic or quartic Hamiltonian. The coefficients are those of
/// 3*psi (cubic) or 4*psi (quartic) in the binomial convention.
struct HamiltonianSpec {
  std::variant<CubicCoeffs, QuarticCoeffs> coeffs;

  int degree() const { return std::holds_alternative<CubicCoeffs>(coeffs) ? 3 : 4; }
  bool is_cubic() const { return degree() == 3; }
  const CubicCoeffs& cubic() const { return std::get<CubicCoeffs>(coeffs); }
  const QuarticCoeffs& quartic() const { return std::get<QuarticCoeffs>(coeffs); }
};

/// U = 3 psi or 4 psi.
BinaryForm u_form(const HamiltonianSpec& h);
BinaryForm psi_form(const HamiltonianSpec& h);

/// The scalar covariant whose flow is a shifted Weierstrass function:
/// -hessian_cubic for cubics, -4 hessian_quartic for quartics.
BinaryForm covariant_F(const HamiltonianSpec& h);

/// dF/dt along the flow, i.e. X_psi(F).
BinaryForm covariant_Fdot(const HamiltonianSpec& h);

/// g2 and g3 as forms in (p, q): cubic (0, -D (3 psi)^2); quartic
/// (S (16 psi)^2, T (16 psi)^3). Evaluated at a phase point they give the
/// constants of the motion for the trajectory through that point.
BinaryForm g2_form(const HamiltonianSpec& h);
BinaryForm g3_form(const HamiltonianSpec& h);

/// (g2, g3) for the energy level psi0.
EllipticParams<Rational> g_constants(const HamiltonianSpec& h, const Rational& psi0);
EllipticParams<double> g_constants(const HamiltonianSpec& h, double psi0, double tol = 1e-12);

/// Coefficient of F in d^2 z/dt^2 = lambda F z: 2 for cubics, 3/4 for quartics.
Rational vector_ode_factor(const HamiltonianSpec& h);

// Residual checks. Each returns exact forms that vanish iff the identity holds.

/// (X_psi^2(p) - lambda F p, X_psi^2(q) - lambda F q).
std::pair<BinaryForm, BinaryForm> verify_vector_ode(const HamiltonianSpec& h);

/// (second-order residual, first-order residual):
///   cubic   [F'' - 6F^2,          F'^2 - 4F^3 - D (3 psi)^2]
///   quartic [F'' - 6F^2 + g2/2,   F'^2 - 4F^3 + g2 F + g3]
std::pair<BinaryForm, BinaryForm> verify_scalar_odes(const HamiltonianSpec& h);

/// cubic X_psi(F) + J, quartic X_psi(F) + 8J.
BinaryForm verify_Fdot_is_minus_J(const HamiltonianSpec& h);

/// (g2^3 - 27 g3^2) - (S^3 - 27 T^2)(16 psi)^6. Throws DegreeError for cubics.
BinaryForm quartic_disc_relation(const HamiltonianSpec& h);

}  // namespace qflow
