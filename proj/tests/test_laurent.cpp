#include <doctest.h>

#include "qfock/laurent.hpp"

using namespace qfock;

TEST_SUITE("laurent") {
  TEST_CASE("arithmetic") {
    const LaurentPoly q = LaurentPoly::q_power(1);
    const LaurentPoly a = q + LaurentPoly::q_power(-1);
    CHECK(to_string(a * a) == "q^-2 + 2 + q^2");
    CHECK((a - a).is_zero());
    CHECK(to_string(-q) == "-q");
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(a.bar() == a);
    CHECK(q.shifted(-3) == LaurentPoly::q_power(-2));
    CHECK((a * q).exact_div(a) == q);
    CHECK_THROWS_AS(q.exact_div(a), std::domain_error);
    CHECK((a * a).eval_at_one() == 4);
  }

  TEST_CASE("parsing round trips") {
    for (const char* s : {"0", "1", "-q", "q^-2 + 1 + 2*q^3", "q^3 + q", "-5*q^-1 + q^4"}) {
      const LaurentPoly f = parse_laurent(s);
      CHECK(parse_laurent(to_string(f)) == f);
    }
    CHECK(parse_laurent("q^3 + q") == parse_laurent("q + q^3"));
    CHECK(parse_laurent(" q^1 + q ") == parse_laurent("2*q"));
    CHECK_THROWS_AS(parse_laurent("q^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_laurent("x"), std::invalid_argument);
  }

  TEST_CASE("big coefficients stay exact") {
    LaurentPoly f = parse_laurent("q + 1");
    LaurentPoly g(1);
    for (int k = 0; k < 100; ++k) g *= f;
    CHECK(g.coeff(50).get_str() == "100891344545564193334812497256");
  }

  TEST_CASE("quantum integers") {
    CHECK(quantum_integer(3, 2) == parse_laurent("q^-4 + 1 + q^4"));
    CHECK(quantum_integer(0, 1).is_zero());
    CHECK(quantum_factorial(3, 1) == parse_laurent("q^-3 + 2*q^-1 + 2*q + q^3"));
    const HParams p(7);
    CHECK(q_of_residue(0, p) == LaurentPoly::q_power(1));
    CHECK(q_of_residue(2, p) == LaurentPoly::q_power(2));
    CHECK(q_of_residue(3, p) == LaurentPoly::q_power(4));
  }

  TEST_CASE("symmetric correction") {
    const LaurentPoly f = parse_laurent("q^-2 + 3 + 5*q + q^4");
    const LaurentPoly c = symmetric_correction(f);
    CHECK(c.is_bar_invariant());
    CHECK((f - c).in_q_zq());
    CHECK(c == parse_laurent("q^-2 + 3 + q^2"));
    CHECK(symmetric_correction(parse_laurent("q + q^2")).is_zero());
  }
}
