#include "qflow/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qflow {

std::string_view to_string(LatticeClass c) {
  switch (c) {
    case LatticeClass::general: return "general";
    case LatticeClass::equianharmonic: return "equianharmonic";
    case LatticeClass::lemniscatic: return "lemniscatic";
    case LatticeClass::degenerate: return "degenerate";
  }
  return "unknown";
}

std::optional<LatticeClass> lattice_class_from_string(std::string_view name) {
  for (auto c : {LatticeClass::general, LatticeClass::equianharmonic, LatticeClass::lemniscatic,
                 LatticeClass::degenerate}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

LatticeClass classify_lattice(double g2, double g3, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("classify_lattice: tol must be positive");
  const double scale = std::max(std::abs(g2), std::cbrt(g3 * g3));
  if (scale == 0) return LatticeClass::degenerate;
  const double g3_scale = scale * std::sqrt(scale);
  const bool g2_zero = std::abs(g2) <= tol * scale;
  const bool g3_zero = std::abs(g3) <= tol * g3_scale;
  if (g2_zero && !g3_zero) return LatticeClass::equianharmonic;
  if (g3_zero && !g2_zero) return LatticeClass::lemniscatic;
  const double disc = g2 * g2 * g2 - 27 * g3 * g3;
  if (std::abs(disc) <= tol * scale * scale * scale) return LatticeClass::degenerate;
  return LatticeClass::general;
}

LatticeClass classify_lattice(const Rational& g2, const Rational& g3) {
  const bool g2_zero = sgn(g2) == 0;
  const bool g3_zero = sgn(g3) == 0;
  if (g2_zero && !g3_zero) return LatticeClass::equianharmonic;
  if (g3_zero && !g2_zero) return LatticeClass::lemniscatic;
  if (g2 * g2 * g2 - 27 * g3 * g3 == 0) return LatticeClass::degenerate;
  return LatticeClass::general;
}

EllipticParams<double> make_elliptic_params(double g2, double g3, double tol) {
  return {g2, g3, g2 * g2 * g2 - 27 * g3 * g3, classify_lattice(g2, g3, tol)};
}

EllipticParams<Rational> make_elliptic_params(const Rational& g2, const Rational& g3) {
  return {g2, g3, Rational(g2 * g2 * g2 - 27 * g3 * g3), classify_lattice(g2, g3)};
}

}  // namespace qflow
