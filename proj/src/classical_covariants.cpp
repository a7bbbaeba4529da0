#include "qflow/classical_covariants.hpp"

namespace qflow {

BinaryForm make_cubic(const CubicCoeffs& c) {
  return BinaryForm({c.a, 3 * c.b, 3 * c.c, c.d});
}

BinaryForm make_quartic(const QuarticCoeffs& c) {
  return BinaryForm({c.a, 4 * c.b, 6 * c.c, 4 * c.d, c.e});
}

CubicCoeffs cubic_coeffs_of(const BinaryForm& f) {
  if (f.degree() != 3) throw DegreeError("expected a cubic form");
  return {f.coeff(0), f.coeff(1) / 3, f.coeff(2) / 3, f.coeff(3)};
}

QuarticCoeffs quartic_coeffs_of(const BinaryForm& f) {
  if (f.degree() != 4) throw DegreeError("expected a quartic form");
  return {f.coeff(0), f.coeff(1) / 4, f.coeff(2) / 6, f.coeff(3) / 4, f.coeff(4)};
}

Rational discriminant_cubic(const CubicCoeffs& c) {
  const auto& [a, b, cc, d] = c;
  return Rational(a * a * d * d - 3 * b * b * cc * cc + 4 * a * cc * cc * cc +
                  4 * b * b * b * d - 6 * a * b * cc * d);
}

BinaryForm hessian_cubic(const CubicCoeffs& c) {
  const auto& [a, b, cc, d] = c;
  return BinaryForm({a * cc - b * b, a * d - b * cc, b * d - cc * cc});
}

BinaryForm jacobian_cubic(const CubicCoeffs& c) {
  const auto& [a, b, cc, d] = c;
  return BinaryForm({
      2 * b * b * b + a * a * d - 3 * a * b * cc,
      3 * (a * b * d + b * b * cc - 2 * a * cc * cc),
      3 * (2 * b * b * d - b * cc * cc - a * cc * d),
      3 * b * cc * d - a * d * d - 2 * cc * cc * cc,
  });
}

Rational invariant_S(const QuarticCoeffs& c) {
  const auto& [a, b, cc, d, e] = c;
  return Rational(a * e - 4 * b * d + 3 * cc * cc);
}

Rational invariant_T(const QuarticCoeffs& c) {
  const auto& [a, b, cc, d, e] = c;
  return Rational(a * cc * e + 2 * b * cc * d - a * d * d - b * b * e - cc * cc * cc);
}

BinaryForm hessian_quartic(const QuarticCoeffs& c) {
  const auto& [a, b, cc, d, e] = c;
  return BinaryForm({
      a * cc - b * b,
      2 * (a * d - b * cc),
      a * e + 2 * b * d - 3 * cc * cc,
      2 * (b * e - cc * d),
      cc * e - d * d,
  });
}

BinaryForm jacobian_quartic(const QuarticCoeffs& c) {
  const BinaryForm u = make_quartic(c);
  const BinaryForm h = hessian_quartic(c);
  return poisson_bracket(u, h) / Rational(8);
}

InvariantSet invariants(const CubicCoeffs& c) {
  InvariantSet set;
  set.degree = 3;
  set.D = discriminant_cubic(c);
  return set;
}

InvariantSet invariants(const QuarticCoeffs& c) {
  InvariantSet set;
  set.degree = 4;
  set.S = invariant_S(c);
  set.T = invariant_T(c);
  const Rational& s = *set.S;
  const Rational& t = *set.T;
  set.disc = Rational(s * s * s - 27 * t * t);
  return set;
}

BinaryForm check_syzygy_cubic(const CubicCoeffs& c) {
  const BinaryForm u = make_cubic(c);
  const BinaryForm h = hessian_cubic(c);
  const BinaryForm j = jacobian_cubic(c);
  const Rational d = discriminant_cubic(c);
  return power(j, 2) + Rational(4) * power(h, 3) - d * power(u, 2);
}

BinaryForm check_syzygy_quartic(const QuarticCoeffs& c) {
  const BinaryForm u = make_quartic(c);
  const BinaryForm h = hessian_quartic(c);
  const BinaryForm j = jacobian_quartic(c);
  const BinaryForm u2 = power(u, 2);
  return power(j, 2) + Rational(4) * power(h, 3) - invariant_S(c) * (u2 * h) +
         invariant_T(c) * (u2 * u);
}

}  // namespace qflow
