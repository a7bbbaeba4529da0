#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qflow/binary_form.hpp"
#include "qflow/rational.hpp"
#include "test_support.hpp"

using namespace qflow;
using qflow::testing::form;
using qflow::testing::Gen;

TEST_CASE("rationals parse exactly and stay canonical") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("+5") == 5);
  const Rational r = parse_rational("-10/4");
  CHECK(r.get_num() == -5);
  CHECK(r.get_den() == 2);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("2/-3"), ParseError);
  CHECK_THROWS_AS(parse_rational(" 2"), ParseError);
}

TEST_CASE("evaluate") {
  const BinaryForm cube_sum = form({1, 0, 0, 1});
  CHECK(evaluate(cube_sum, Rational(1), Rational(0)) == 1);
  CHECK(evaluate(cube_sum, Rational(1), Rational(-1)) == 0);
  CHECK(evaluate(form({0, 1, 0}), Rational(2), Rational(3)) == 6);
  CHECK(evaluate(form({0, 1, 0}), 2.0, 3.0) == doctest::Approx(6.0));
  CHECK(evaluate(form({1, 2, 3}), Rational(1, 2), Rational(-1, 3)) ==
        Rational(1, 4) - Rational(1, 3) + Rational(1, 3));
  CHECK(evaluate(BinaryForm::constant(Rational(7)), 0.0, 0.0) == 7.0);
}

TEST_CASE("numeric evaluation agrees with exact evaluation") {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const BinaryForm f = g.form(g.integer(0, 8));
    const Rational p = g.rational(5, 7);
    const Rational q = g.rational(5, 7);
    const double exact = evaluate(f, p, q).get_d();
    const double approx = evaluate(f, p.get_d(), q.get_d());
    CHECK(approx == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("arithmetic") {
  const BinaryForm pq = form({0, 1, 0});
  CHECK(power(pq, 3) == form({0, 0, 0, 1, 0, 0, 0}));
  CHECK(power(form({1, 0, 0, 1}), 2) == form({1, 0, 0, 2, 0, 0, 1}));
  const BinaryForm sq = form({1, 0, 0});
  const BinaryForm z = add(sq, -sq);
  CHECK(z.is_zero());
  CHECK(z.degree() == 2);
  CHECK(multiply(form({1, 1}), form({1, -1})) == form({1, 0, -1}));
  CHECK(scale(form({1, 2}), Rational(1, 2)) == BinaryForm({Rational(1, 2), Rational(1)}));
  CHECK(power(form({1, 1}), 0) == BinaryForm::constant(Rational(1)));
  CHECK_THROWS_AS(add(form({1, 0}), form({1, 0, 0})), DegreeError);
  CHECK_THROWS_AS(power(form({1, 0}), -1), DegreeError);
  CHECK_THROWS_AS(BinaryForm(std::vector<Rational>{}), DegreeError);
}

TEST_CASE("partial derivatives") {
  CHECK(partial_p(form({1, 0, 0, 1})) == form({3, 0, 0}));
  CHECK(partial_q(form({1, 0, 0, 1})) == form({0, 0, 3}));
  CHECK(partial_p(form({0, 0, 1, 0, 0})) == form({0, 0, 2, 0}));
  CHECK_THROWS_AS(partial_p(BinaryForm::constant(Rational(2))), DegreeError);
  CHECK_THROWS_AS(partial_q(BinaryForm::constant(Rational(2))), DegreeError);
}

TEST_CASE("poisson bracket examples") {
  CHECK(poisson_bracket(BinaryForm::p(), BinaryForm::q()) == BinaryForm::constant(Rational(1)));
  const BinaryForm psi = form({1, 0, 0, 1}) / Rational(3);
  const BinaryForm f = form({0, -1, 0});
  // p^2 * (-p) - q^2 * (-q)
  CHECK(poisson_bracket(psi, f) == form({-1, 0, 0, 1}));
  CHECK(poisson_bracket(psi, psi).is_zero());
  CHECK(poisson_bracket(psi, psi).degree() == 4);
  CHECK_THROWS_AS(poisson_bracket(BinaryForm::constant(Rational(1)), psi), DegreeError);
}

TEST_CASE("poisson bracket: antisymmetry and Leibniz rule on random forms") {
  Gen g(2024);
  for (int i = 0; i < 200; ++i) {
    const BinaryForm f = g.form(g.integer(1, 4));
    const BinaryForm a = g.form(g.integer(1, 4));
    const BinaryForm b = g.form(g.integer(1, 4));
    CHECK((poisson_bracket(f, a) + poisson_bracket(a, f)).is_zero());
    // X_f(ab) = X_f(a) b + a X_f(b)
    CHECK(poisson_bracket(f, a * b) == poisson_bracket(f, a) * b + a * poisson_bracket(f, b));
    CHECK(poisson_bracket(f, f).is_zero());
  }
}

TEST_CASE("linear substitution composes with evaluation") {
  Gen g(5);
  for (int i = 0; i < 50; ++i) {
    const BinaryForm f = g.form(g.integer(0, 5));
    const Rational m00 = g.rational(4), m01 = g.rational(4), m10 = g.rational(4),
                   m11 = g.rational(4);
    const BinaryForm h = linear_substitute(f, m00, m01, m10, m11);
    const Rational p = g.rational(3), q = g.rational(3);
    CHECK(evaluate(h, p, q) == evaluate(f, Rational(m00 * p + m01 * q), Rational(m10 * p + m11 * q)));
  }
}

TEST_CASE("to_string") {
  CHECK(to_string(form({1, 0, 0, -1})) == "p^3 - q^3");
  CHECK(to_string(form({0, 0, 0})) == "0");
  CHECK(to_string(form({-2, 1})) == "-2 p + q");
  CHECK(to_string(BinaryForm::constant(Rational(-3, 2))) == "-3/2");
  CHECK(to_string(BinaryForm({Rational(0), Rational(1, 2), Rational(0)})) == "1/2 p q");
}
