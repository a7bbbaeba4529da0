#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qflow/rational.hpp"

namespace qflow {

class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Homogeneous polynomial in (p, q) with exact rational coefficients.
///
/// Coefficients are stored in the raw monomial basis: coeff(k) multiplies
/// p^(degree - k) q^k. Binomial weights belong to the constructors of
/// cubics and quartics, never to this type. The zero form keeps its nominal
/// degree, so add() of forms of different degree is an error even when one
/// side vanishes.
class BinaryForm {
 public:
  /// Zero form of degree 0.
  BinaryForm();
  /// Degree is coeffs.size() - 1; coeffs must be non-empty.
  explicit BinaryForm(std::vector<Rational> coeffs);

  static BinaryForm zero(int degree);
  static BinaryForm constant(Rational value);
  static BinaryForm p();
  static BinaryForm q();
  /// c p^(degree - k) q^k.
  static BinaryForm monomial(int degree, int k, Rational c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  bool is_zero() const;

  BinaryForm& operator+=(const BinaryForm& other);
  BinaryForm& operator-=(const BinaryForm& other);
  BinaryForm& operator*=(const Rational& k);

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// Throws DegreeError unless both operands share a degree.
BinaryForm add(const BinaryForm& f, const BinaryForm& g);
BinaryForm scale(const BinaryForm& f, const Rational& k);
BinaryForm multiply(const BinaryForm& f, const BinaryForm& g);
BinaryForm power(const BinaryForm& f, int n);

inline BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) { return add(f, g); }
inline BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
  BinaryForm r = f;
  r -= g;
  return r;
}
inline BinaryForm operator-(const BinaryForm& f) { return scale(f, Rational(-1)); }
inline BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) { return multiply(f, g); }
inline BinaryForm operator*(const Rational& k, const BinaryForm& f) { return scale(f, k); }
inline BinaryForm operator*(const BinaryForm& f, const Rational& k) { return scale(f, k); }
inline BinaryForm operator/(const BinaryForm& f, const Rational& k) {
  return scale(f, Rational(1) / k);
}

/// Throws DegreeError on a degree-0 input.
BinaryForm partial_p(const BinaryForm& f);
BinaryForm partial_q(const BinaryForm& f);

/// X_f(g) = f_p g_q - f_q g_p. Along the flow of a Hamiltonian psi,
/// dg/dt = poisson_bracket(psi, g).
BinaryForm poisson_bracket(const BinaryForm& f, const BinaryForm& g);

/// f(m00 p + m01 q, m10 p + m11 q).
BinaryForm linear_substitute(const BinaryForm& f, const Rational& m00, const Rational& m01,
                             const Rational& m10, const Rational& m11);

Rational evaluate(const BinaryForm& f, const Rational& p, const Rational& q);
double evaluate(const BinaryForm& f, double p, double q);

/// Human-readable polynomial such as "p^3 - 3/2 p q^2 + q^3" ("0" for zero).
std::string to_string(const BinaryForm& f);

/// Floating-point copy of a form for repeated evaluation in hot loops.
class NumericForm {
 public:
  NumericForm() = default;
  explicit NumericForm(const BinaryForm& f);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double operator()(double p, double q) const;

 private:
  std::vector<double> coeffs_{0.0};
};

}  // namespace qflow
