#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qflow/rational.hpp"

namespace qflow {

enum class LatticeClass { general, equianharmonic, lemniscatic, degenerate };

std::string_view to_string(LatticeClass c);
std::optional<LatticeClass> lattice_class_from_string(std::string_view name);

/// Weierstrass invariants (g2, g3) of the curve s'^2 = 4s^3 - g2 s - g3.
template <typename Scalar>
struct EllipticParams {
  Scalar g2{};
  Scalar g3{};
  Scalar weierstrass_disc{};  // g2^3 - 27 g3^2
  LatticeClass lattice_class = LatticeClass::degenerate;
};

/// Floating-point classification. With scale = max(|g2|, |g3|^(2/3)):
/// equianharmonic if |g2| <= tol*scale < |g3|/scale^(1/2), lemniscatic
/// symmetrically, degenerate if |g2^3 - 27 g3^2| <= tol*scale^3, general
/// otherwise. g2 = g3 = 0 is degenerate.
LatticeClass classify_lattice(double g2, double g3, double tol);

/// Exact classification (zero means zero).
LatticeClass classify_lattice(const Rational& g2, const Rational& g3);

EllipticParams<double> make_elliptic_params(double g2, double g3, double tol = 1e-12);
EllipticParams<Rational> make_elliptic_params(const Rational& g2, const Rational& g3);

}  // namespace qflow
