#pragma once

// Seeded generators for property tests.

#include <random>
#include <vector>

#include "qflow/binary_form.hpp"
#include "qflow/classical_covariants.hpp"
#include "qflow/covariant_dynamics.hpp"

namespace qflow::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Rational rational(int range = 20, int max_den = 9) {
    Rational r(integer(-range, range), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(int range = 9, int max_den = 9) {
    Rational r;
    do r = rational(range, max_den);
    while (sgn(r) == 0);
    return r;
  }

  CubicCoeffs cubic(int range = 20) {
    return {Rational(integer(-range, range)), Rational(integer(-range, range)),
            Rational(integer(-range, range)), Rational(integer(-range, range))};
  }

  QuarticCoeffs quartic(int range = 20) {
    return {Rational(integer(-range, range)), Rational(integer(-range, range)),
            Rational(integer(-range, range)), Rational(integer(-range, range)),
            Rational(integer(-range, range))};
  }

  BinaryForm form(int degree, int range = 9) {
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) c.push_back(rational(range));
    return BinaryForm(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline BinaryForm form(std::initializer_list<int> coeffs) {
  std::vector<Rational> c;
  for (int x : coeffs) c.emplace_back(x);
  return BinaryForm(std::move(c));
}

inline CubicCoeffs cubic(int a, int b, int c, int d) {
  return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

inline QuarticCoeffs quartic(int a, int b, int c, int d, int e) {
  return {Rational(a), Rational(b), Rational(c), Rational(d), Rational(e)};
}

}  // namespace qflow::testing
