#include "qflow/binary_form.hpp"

#include <cmath>
#include <sstream>

namespace qflow {

BinaryForm::BinaryForm() : coeffs_(1) {}

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DegreeError("a binary form needs at least one coefficient");
  // mpq_class(num, den) does not reduce; equality assumes canonical form.
  for (auto& c : coeffs_) c.canonicalize();
}

BinaryForm BinaryForm::zero(int degree) {
  if (degree < 0) throw DegreeError("negative degree");
  return BinaryForm(std::vector<Rational>(static_cast<std::size_t>(degree) + 1));
}

BinaryForm BinaryForm::constant(Rational value) { return BinaryForm({std::move(value)}); }

BinaryForm BinaryForm::p() { return BinaryForm({Rational(1), Rational(0)}); }

BinaryForm BinaryForm::q() { return BinaryForm({Rational(0), Rational(1)}); }

BinaryForm BinaryForm::monomial(int degree, int k, Rational c) {
  if (k < 0 || k > degree) throw DegreeError("monomial index out of range");
  BinaryForm f = zero(degree);
  f.coeffs_[static_cast<std::size_t>(k)] = std::move(c);
  return f;
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& other) {
  if (degree() != other.degree()) {
    throw DegreeError("cannot add forms of degree " + std::to_string(degree()) + " and " +
                      std::to_string(other.degree()));
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& other) {
  if (degree() != other.degree()) {
    throw DegreeError("cannot subtract forms of degree " + std::to_string(degree()) + " and " +
                      std::to_string(other.degree()));
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

BinaryForm& BinaryForm::operator*=(const Rational& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

BinaryForm add(const BinaryForm& f, const BinaryForm& g) {
  BinaryForm r = f;
  r += g;
  return r;
}

BinaryForm scale(const BinaryForm& f, const Rational& k) {
  BinaryForm r = f;
  r *= k;
  return r;
}

BinaryForm multiply(const BinaryForm& f, const BinaryForm& g) {
  const int m = f.degree();
  const int n = g.degree();
  std::vector<Rational> out(static_cast<std::size_t>(m + n) + 1);
  for (int i = 0; i <= m; ++i) {
    if (sgn(f.coeff(i)) == 0) continue;
    for (int j = 0; j <= n; ++j) {
      out[static_cast<std::size_t>(i + j)] += f.coeff(i) * g.coeff(j);
    }
  }
  return BinaryForm(std::move(out));
}

BinaryForm power(const BinaryForm& f, int n) {
  if (n < 0) throw DegreeError("negative exponent");
  BinaryForm result = BinaryForm::constant(Rational(1));
  BinaryForm base = f;
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

BinaryForm partial_p(const BinaryForm& f) {
  const int n = f.degree();
  if (n < 1) throw DegreeError("cannot differentiate a degree-0 form");
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = f.coeff(k) * (n - k);
  return BinaryForm(std::move(out));
}

BinaryForm partial_q(const BinaryForm& f) {
  const int n = f.degree();
  if (n < 1) throw DegreeError("cannot differentiate a degree-0 form");
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k - 1)] = f.coeff(k) * k;
  return BinaryForm(std::move(out));
}

BinaryForm poisson_bracket(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() < 1 || g.degree() < 1) {
    throw DegreeError("poisson bracket needs forms of degree >= 1");
  }
  return partial_p(f) * partial_q(g) - partial_q(f) * partial_p(g);
}

BinaryForm linear_substitute(const BinaryForm& f, const Rational& m00, const Rational& m01,
                             const Rational& m10, const Rational& m11) {
  const int n = f.degree();
  const BinaryForm x = BinaryForm({m00, m01});
  const BinaryForm y = BinaryForm({m10, m11});
  BinaryForm out = BinaryForm::zero(n);
  for (int k = 0; k <= n; ++k) {
    if (sgn(f.coeff(k)) == 0) continue;
    out += f.coeff(k) * (power(x, n - k) * power(y, k));
  }
  return out;
}

Rational evaluate(const BinaryForm& f, const Rational& p, const Rational& q) {
  // Horner in p, carrying powers of q.
  Rational acc = 0;
  Rational q_pow = 1;
  for (int k = 0; k <= f.degree(); ++k) {
    acc = acc * p + f.coeff(k) * q_pow;
    q_pow *= q;
  }
  return acc;
}

double evaluate(const BinaryForm& f, double p, double q) { return NumericForm(f)(p, q); }

std::string to_string(const BinaryForm& f) {
  std::ostringstream os;
  const int n = f.degree();
  bool first = true;
  for (int k = 0; k <= n; ++k) {
    const Rational& c = f.coeff(k);
    if (sgn(c) == 0) continue;
    const int pe = n - k;
    const int qe = k;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || (pe == 0 && qe == 0)) {
      os << mag.get_str();
      if (pe > 0 || qe > 0) os << " ";
    }
    if (pe > 0) {
      os << "p";
      if (pe > 1) os << "^" << pe;
    }
    if (qe > 0) {
      if (pe > 0) os << " ";
      os << "q";
      if (qe > 1) os << "^" << qe;
    }
  }
  if (first) return "0";
  return os.str();
}

NumericForm::NumericForm(const BinaryForm& f) {
  coeffs_.clear();
  coeffs_.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) coeffs_.push_back(c.get_d());
}

double NumericForm::operator()(double p, double q) const {
  const int n = degree();
  double acc = 0.0;
  if (std::abs(p) >= std::abs(q)) {
    // p^n * sum c_k r^k with r = q/p, Horner in r.
    if (p == 0.0) return n == 0 ? coeffs_[0] : 0.0;
    const double r = q / p;
    for (int k = n; k >= 0; --k) acc = acc * r + coeffs_[static_cast<std::size_t>(k)];
    return acc * std::pow(p, n);
  }
  const double r = p / q;
  for (int k = 0; k <= n; ++k) acc = acc * r + coeffs_[static_cast<std::size_t>(k)];
  return acc * std::pow(q, n);
}

}  // namespace qflow
