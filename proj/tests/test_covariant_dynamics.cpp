#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qflow/covariant_dynamics.hpp"
#include "test_support.hpp"

using namespace qflow;
using qflow::testing::cubic;
using qflow::testing::form;
using qflow::testing::Gen;
using qflow::testing::quartic;

namespace {

HamiltonianSpec cubic_h(int a, int b, int c, int d) { return {cubic(a, b, c, d)}; }
HamiltonianSpec quartic_h(int a, int b, int c, int d, int e) { return {quartic(a, b, c, d, e)}; }

}  // namespace

TEST_CASE("psi is U/3 or U/4") {
  CHECK(psi_form(cubic_h(1, 0, 0, 1)) == form({1, 0, 0, 1}) / Rational(3));
  CHECK(psi_form(quartic_h(1, 0, 0, 0, 1)) == form({1, 0, 0, 0, 1}) / Rational(4));
  CHECK(cubic_h(1, 0, 0, 1).degree() == 3);
  CHECK(quartic_h(1, 0, 0, 0, 1).degree() == 4);
}

TEST_CASE("covariant F") {
  CHECK(covariant_F(cubic_h(1, 0, 0, 1)) == form({0, -1, 0}));
  CHECK(covariant_F(quartic_h(1, 0, 0, 0, 1)) == form({0, 0, -4, 0, 0}));
  CHECK(covariant_F(cubic_h(1, 1, 1, 1)) == BinaryForm::zero(2));
}

TEST_CASE("covariant F matches the displayed cubic F and quartic G formulas") {
  Gen g(21);
  for (int i = 0; i < 100; ++i) {
    const CubicCoeffs c{g.rational(), g.rational(), g.rational(), g.rational()};
    const auto& [a, b, cc, d] = c;
    const BinaryForm displayed({b * b - a * cc, b * cc - a * d, cc * cc - b * d});
    CHECK(covariant_F(HamiltonianSpec{c}) == displayed);

    const QuarticCoeffs q{g.rational(), g.rational(), g.rational(), g.rational(), g.rational()};
    const BinaryForm big_g({q.b * q.b - q.a * q.c, 2 * (q.b * q.c - q.a * q.d),
                            3 * q.c * q.c - 2 * q.b * q.d - q.a * q.e, 2 * (q.c * q.d - q.b * q.e),
                            q.d * q.d - q.c * q.e});
    CHECK(covariant_F(HamiltonianSpec{q}) == Rational(4) * big_g);
  }
}

TEST_CASE("g constants") {
  const auto cubic_params = g_constants(cubic_h(1, 0, 0, 1), Rational(1, 3));
  CHECK(cubic_params.g2 == 0);
  CHECK(cubic_params.g3 == -1);
  CHECK(cubic_params.lattice_class == LatticeClass::equianharmonic);

  const auto quartic_params = g_constants(quartic_h(1, 0, 0, 0, 1), Rational(1, 2));
  CHECK(quartic_params.g2 == 64);
  CHECK(quartic_params.g3 == 0);
  CHECK(quartic_params.lattice_class == LatticeClass::lemniscatic);

  for (const auto& h : {cubic_h(3, -1, 2, 5), quartic_h(1, 2, 3, 4, 5)}) {
    const auto zero = g_constants(h, Rational(0));
    CHECK(zero.g2 == 0);
    CHECK(zero.g3 == 0);
    CHECK(zero.lattice_class == LatticeClass::degenerate);
    const auto zero_d = g_constants(h, 0.0);
    CHECK(zero_d.lattice_class == LatticeClass::degenerate);
  }

  const auto numeric = g_constants(cubic_h(1, 0, 0, 1), 1.0 / 3);
  CHECK(numeric.g2 == 0.0);
  CHECK(numeric.g3 == doctest::Approx(-1.0));
  CHECK(numeric.lattice_class == LatticeClass::equianharmonic);
  CHECK(numeric.weierstrass_disc == doctest::Approx(-27.0));
}

TEST_CASE("g forms evaluate to g constants") {
  Gen g(22);
  for (int i = 0; i < 50; ++i) {
    const HamiltonianSpec h = i % 2 ? HamiltonianSpec{g.cubic(6)} : HamiltonianSpec{g.quartic(6)};
    const Rational p = g.rational(3, 4), q = g.rational(3, 4);
    const auto params = g_constants(h, evaluate(psi_form(h), p, q));
    CHECK(evaluate(g2_form(h), p, q) == params.g2);
    CHECK(evaluate(g3_form(h), p, q) == params.g3);
  }
}

TEST_CASE("vector ODE examples") {
  {
    const auto h = cubic_h(1, 0, 0, 1);
    const BinaryForm psi = psi_form(h);
    CHECK(poisson_bracket(psi, poisson_bracket(psi, BinaryForm::p())) == form({0, -2, 0, 0}));
    const auto [rp, rq] = verify_vector_ode(h);
    CHECK(rp.is_zero());
    CHECK(rq.is_zero());
  }
  {
    const auto h = quartic_h(1, 0, 0, 0, 1);
    const BinaryForm psi = psi_form(h);
    CHECK(poisson_bracket(psi, poisson_bracket(psi, BinaryForm::p())) ==
          form({0, 0, -3, 0, 0, 0}));
    const auto [rp, rq] = verify_vector_ode(h);
    CHECK(rp.is_zero());
    CHECK(rq.is_zero());
  }
  {
    const auto h = cubic_h(1, 1, 1, 1);
    const BinaryForm psi = psi_form(h);
    CHECK(poisson_bracket(psi, poisson_bracket(psi, BinaryForm::p())).is_zero());
    const auto [rp, rq] = verify_vector_ode(h);
    CHECK(rp.is_zero());
    CHECK(rq.is_zero());
  }
}

TEST_CASE("vector ODE factor for quartics is 3/4, not 2") {
  const auto h = quartic_h(1, 0, 0, 0, 1);
  CHECK(vector_ode_factor(h) == Rational(3, 4));
  const BinaryForm psi = psi_form(h);
  const BinaryForm p_ddot = poisson_bracket(psi, poisson_bracket(psi, BinaryForm::p()));
  CHECK_FALSE((p_ddot - Rational(2) * covariant_F(h) * BinaryForm::p()).is_zero());
}

TEST_CASE("scalar ODE examples") {
  {
    const auto h = cubic_h(1, 0, 0, 1);
    CHECK(covariant_Fdot(h) == form({-1, 0, 0, 1}));
    const auto [second, first] = verify_scalar_odes(h);
    CHECK(second.is_zero());
    CHECK(first.is_zero());
  }
  {
    const auto h = quartic_h(1, 0, 0, 0, 1);
    // -8pq(p^4 - q^4)
    CHECK(covariant_Fdot(h) == form({0, -8, 0, 0, 0, 8, 0}));
    const BinaryForm f_ddot = poisson_bracket(psi_form(h), covariant_Fdot(h));
    CHECK(f_ddot == form({-8, 0, 0, 0, 80, 0, 0, 0, -8}));
    const auto [second, first] = verify_scalar_odes(h);
    CHECK(second.is_zero());
    CHECK(first.is_zero());
  }
}

TEST_CASE("Fdot = -J (cubic), Fdot = -8J (quartic)") {
  CHECK(verify_Fdot_is_minus_J(cubic_h(1, 0, 0, 1)).is_zero());
  CHECK(verify_Fdot_is_minus_J(quartic_h(1, 0, 0, 0, 1)).is_zero());
  CHECK(verify_Fdot_is_minus_J(cubic_h(0, 0, 0, 0)).is_zero());
  CHECK(verify_Fdot_is_minus_J(quartic_h(0, 0, 0, 0, 0)).is_zero());
}

TEST_CASE("quartic discriminant relation") {
  CHECK(quartic_disc_relation(quartic_h(1, 0, 0, 0, 1)).is_zero());
  CHECK(quartic_disc_relation(quartic_h(1, 1, 1, 1, 1)).is_zero());
  CHECK(quartic_disc_relation(quartic_h(0, 0, 0, 0, 0)).is_zero());
  CHECK_THROWS_AS(quartic_disc_relation(cubic_h(1, 0, 0, 1)), DegreeError);
}

TEST_CASE("all residual identities vanish on random Hamiltonians") {
  Gen g(31);
  for (int i = 0; i < 1000; ++i) {
    for (const HamiltonianSpec& h : {HamiltonianSpec{g.cubic()}, HamiltonianSpec{g.quartic()}}) {
      const auto [vp, vq] = verify_vector_ode(h);
      REQUIRE(vp.is_zero());
      REQUIRE(vq.is_zero());
      const auto [second, first] = verify_scalar_odes(h);
      REQUIRE(second.is_zero());
      REQUIRE(first.is_zero());
      REQUIRE(verify_Fdot_is_minus_J(h).is_zero());
      if (!h.is_cubic()) REQUIRE(quartic_disc_relation(h).is_zero());
    }
  }
}

TEST_CASE("psi, g2 and g3 are constants of the motion") {
  Gen g(32);
  for (int i = 0; i < 200; ++i) {
    const HamiltonianSpec h = i % 2 ? HamiltonianSpec{g.cubic()} : HamiltonianSpec{g.quartic()};
    const BinaryForm psi = psi_form(h);
    CHECK(poisson_bracket(psi, psi).is_zero());
    CHECK(poisson_bracket(psi, g2_form(h)).is_zero());
    CHECK(poisson_bracket(psi, g3_form(h)).is_zero());
  }
}

TEST_CASE("F is quadratic in the coefficients") {
  Gen g(33);
  for (int i = 0; i < 100; ++i) {
    const Rational mu = g.nonzero_rational();
    const CubicCoeffs c = g.cubic();
    const CubicCoeffs cm{mu * c.a, mu * c.b, mu * c.c, mu * c.d};
    CHECK(covariant_F(HamiltonianSpec{cm}) == mu * mu * covariant_F(HamiltonianSpec{c}));
    const QuarticCoeffs q = g.quartic();
    const QuarticCoeffs qm{mu * q.a, mu * q.b, mu * q.c, mu * q.d, mu * q.e};
    CHECK(covariant_F(HamiltonianSpec{qm}) == mu * mu * covariant_F(HamiltonianSpec{q}));
  }
}

namespace {

// Candidate proportionality constants +-n/d.
std::vector<Rational> candidate_constants() {
  std::set<Rational> s;
  for (int n = 1; n <= 16; ++n) {
    for (int d : {1, 2, 3, 4, 6, 8, 12, 16}) {
      Rational r(n, d);
      r.canonicalize();
      s.insert(r);
      s.insert(-r);
    }
  }
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("proportionality constants H = hF, J = jFdot from the syzygy alone") {
  // Substituting U = n psi, H = hF, J = jFdot into the syzygy must reproduce
  // Fdot^2 = 4F^3 - g2 F - g3. Search (h, j) over a grid; the syzygy is
  // affine in j^2 and cubic in h, so precompute its pieces per form.
  Gen g(41);
  const auto candidates = candidate_constants();

  struct Pieces {
    BinaryForm fdot2, f3, s_u2_f, t_u3;
  };
  std::vector<Pieces> quartic_pieces;
  std::vector<Pieces> cubic_pieces;
  for (int i = 0; i < 6; ++i) {
    const HamiltonianSpec hq{g.quartic()};
    const BinaryForm u = u_form(hq);
    const BinaryForm f = covariant_F(hq);
    quartic_pieces.push_back({power(covariant_Fdot(hq), 2), power(f, 3),
                              invariant_S(hq.quartic()) * (power(u, 2) * f),
                              invariant_T(hq.quartic()) * power(u, 3)});
    const HamiltonianSpec hc{g.cubic()};
    const BinaryForm uc = u_form(hc);
    cubic_pieces.push_back({power(covariant_Fdot(hc), 2), power(covariant_F(hc), 3),
                            discriminant_cubic(hc.cubic()) * power(uc, 2), BinaryForm::zero(6)});
  }

  std::vector<std::pair<Rational, Rational>> quartic_hits;
  std::vector<std::pair<Rational, Rational>> cubic_hits;
  for (const auto& h : candidates) {
    const Rational h3 = h * h * h;
    for (const auto& j : candidates) {
      const Rational j2 = j * j;
      bool ok = true;
      for (const auto& pc : quartic_pieces) {
        // J^2 + 4H^3 - S U^2 H + T U^3
        ok = ok && (j2 * pc.fdot2 + Rational(4 * h3) * pc.f3 - h * pc.s_u2_f + pc.t_u3).is_zero();
        if (!ok) break;
      }
      if (ok) quartic_hits.emplace_back(h, j);
      ok = true;
      for (const auto& pc : cubic_pieces) {
        // J^2 + 4H^3 - D U^2
        ok = ok && (j2 * pc.fdot2 + Rational(4 * h3) * pc.f3 - pc.s_u2_f).is_zero();
        if (!ok) break;
      }
      if (ok) cubic_hits.emplace_back(h, j);
    }
  }
  REQUIRE(quartic_hits.size() == 2);
  for (const auto& [h, j] : quartic_hits) {
    CHECK(h == Rational(-1, 4));
    CHECK(abs(j) == Rational(1, 8));
  }
  REQUIRE(cubic_hits.size() == 2);
  for (const auto& [h, j] : cubic_hits) {
    CHECK(h == -1);
    CHECK(abs(j) == 1);
  }

  // The sign of j is fixed by the dynamics: X_psi(F) = -8J resp. -J.
  for (int i = 0; i < 20; ++i) {
    const HamiltonianSpec hq{g.quartic()};
    if (covariant_Fdot(hq).is_zero()) continue;
    CHECK((jacobian_quartic(hq.quartic()) + covariant_Fdot(hq) / Rational(8)).is_zero());
    CHECK_FALSE((jacobian_quartic(hq.quartic()) - covariant_Fdot(hq) / Rational(8)).is_zero());
    CHECK((Rational(4) * hessian_quartic(hq.quartic()) + covariant_F(hq)).is_zero());
  }
}
