#pragma once

#include <optional>

#include "qflow/binary_form.hpp"
#include "qflow/rational.hpp"

namespace qflow {

// Coefficients in the binomial convention:
//   cubic   a p^3 + 3b p^2 q + 3c p q^2 + d q^3
//   quartic a p^4 + 4b p^3 q + 6c p^2 q^2 + 4d p q^3 + e q^4
struct CubicCoeffs {
  Rational a, b, c, d;
};

struct QuarticCoeffs {
  Rational a, b, c, d, e;
};

/// Scalar invariants of a cubic ({D}) or a quartic ({S, T, S^3 - 27 T^2}).
struct InvariantSet {
  int degree = 0;
  std::optional<Rational> D;
  std::optional<Rational> S;
  std::optional<Rational> T;
  std::optional<Rational> disc;
};

BinaryForm make_cubic(const CubicCoeffs& c);
BinaryForm make_quartic(const QuarticCoeffs& c);

/// Inverse of make_cubic/make_quartic. Throws DegreeError on a wrong degree.
CubicCoeffs cubic_coeffs_of(const BinaryForm& f);
QuarticCoeffs quartic_coeffs_of(const BinaryForm& f);

/// a^2 d^2 - 3 b^2 c^2 + 4 a c^3 + 4 b^3 d - 6 a b c d
Rational discriminant_cubic(const CubicCoeffs& c);

/// (ac - b^2) p^2 + (ad - bc) pq + (bd - c^2) q^2
BinaryForm hessian_cubic(const CubicCoeffs& c);

/// The cubic Jacobian covariant, from its closed-form coefficients. Equal to
/// (U_p H_q - U_q H_p) / 3 with U = make_cubic(c), H = hessian_cubic(c).
BinaryForm jacobian_cubic(const CubicCoeffs& c);

Rational invariant_S(const QuarticCoeffs& c);
Rational invariant_T(const QuarticCoeffs& c);

/// Quartic Hessian covariant (degree 4).
BinaryForm hessian_quartic(const QuarticCoeffs& c);

/// Sextic Jacobian covariant (U_p H_q - U_q H_p) / 8. The divisor is the one
/// for which J^2 = -4H^3 + S U^2 H - T U^3 holds identically.
BinaryForm jacobian_quartic(const QuarticCoeffs& c);

InvariantSet invariants(const CubicCoeffs& c);
InvariantSet invariants(const QuarticCoeffs& c);

/// J^2 + 4H^3 - D U^2. The zero form exactly when the Cayley identity holds.
BinaryForm check_syzygy_cubic(const CubicCoeffs& c);

/// J^2 + 4H^3 - S U^2 H + T U^3.
BinaryForm check_syzygy_quartic(const QuarticCoeffs& c);

}  // namespace qflow
