#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "macfill/laurent.hpp"

using namespace macfill;

TEST_SUITE("qtring") {
  TEST_CASE("ring axioms on random Laurent polynomials") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const LaurentQT a = testing::random_laurent(rng), b = testing::random_laurent(rng), c = testing::random_laurent(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(a * LaurentQT(1) == a);
      CHECK((a * LaurentQT(0)).is_zero());
      CHECK(-(-a) == a);
      CHECK((a * b).evaluate(-1, 1) == a.evaluate(-1, 1) * b.evaluate(-1, 1));
    }
  }

  TEST_CASE("zero coefficients are never stored") {
    LaurentQT a;
    a.add_term(1, 2, 5);
    a.add_term(1, 2, -5);
    CHECK(a.is_zero());
    CHECK(a.term_count() == 0);
    CHECK(LaurentQT::monomial(3, 0, 0).is_zero());
  }

  TEST_CASE("negative exponents and inversion") {
    const LaurentQT a = LaurentQT::monomial(-1, 2) + LaurentQT::q();
    CHECK(a.has_negative_exponent());
    CHECK(a.min_q_exponent() == -1);
    CHECK(a.min_t_exponent() == 0);
    CHECK(invert_q(invert_q(a)) == a);
    CHECK(invert_t(a) == LaurentQT::monomial(-1, -2) + LaurentQT::q());
    CHECK(qt_swap(a) == LaurentQT::monomial(2, -1) + LaurentQT::t());
    CHECK(a.shifted(1, 0) == LaurentQT::t(2) + LaurentQT::q(2));
  }

  TEST_CASE("rendering") {
    CHECK(LaurentQT().to_string() == "0");
    CHECK(LaurentQT(1).to_string() == "1");
    CHECK((LaurentQT::q() + LaurentQT::t()).to_string() == "t + q");
    CHECK((LaurentQT::monomial(1, 1) + LaurentQT(2)).to_string() == "2 + q*t");
    CHECK((LaurentQT::q(2) - LaurentQT::q()).to_string() == "-q + q^2");
    CHECK(LaurentQT::monomial(0, -1, 3).to_string() == "3*t^-1");
  }

  TEST_CASE("coefficients beyond machine integers") {
    BigInt big("123456789012345678901234567890");
    const LaurentQT a = LaurentQT::monomial(1, 0, big);
    const LaurentQT sq = a * a;
    CHECK(sq.coeff(2, 0) == big * big);
    CHECK((sq - sq).is_zero());
  }

  TEST_CASE("specialization q -> t^alpha and division by (1-t)^n") {
    const LaurentQT a = LaurentQT(1) - LaurentQT::monomial(1, 1);
    CHECK(qt_substitute_q_power_of_t(a, 2) == LaurentQT(1) - LaurentQT::t(3));
    // (1 - t^3)/(1 - t) = 1 + t + t^2, which is 3 at t = 1
    const LaurentQT quotient = divide_by_power_of_one_minus_t(LaurentQT(1) - LaurentQT::t(3), 1);
    CHECK(quotient == LaurentQT(1) + LaurentQT::t() + LaurentQT::t(2));
    CHECK(eval_t1(quotient) == 3);
    const LaurentQT one_minus_t = LaurentQT(1) - LaurentQT::t();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      LaurentQT p;
      for (int k = 0; k < 4; ++k) p.add_term(0, static_cast<int>(rng() % 5), static_cast<long>(rng() % 7) - 3);
      const int n = static_cast<int>(rng() % 3) + 1;
      LaurentQT prod = p;
      for (int k = 0; k < n; ++k) prod *= one_minus_t;
      CHECK(divide_by_power_of_one_minus_t(prod, n) == p);
    }
    CHECK_THROWS(divide_by_power_of_one_minus_t(LaurentQT(1), 1));
  }

  TEST_CASE("elementary symmetric functions of monomials") {
    const std::vector<QTExponent> b{{1, 0}, {0, 1}};
    const auto e = elementary_symmetric(b);
    REQUIRE(e.size() == 3);
    CHECK(e[0] == LaurentQT(1));
    CHECK(e[1] == LaurentQT::q() + LaurentQT::t());
    CHECK(e[2] == LaurentQT::monomial(1, 1));
  }

  TEST_CASE("alpha polynomials") {
    const AlphaPoly a = AlphaPoly(2) + AlphaPoly::alpha();
    CHECK(a.evaluate(3) == 5);
    CHECK((a * a).evaluate(3) == 25);
    CHECK(a.to_string() == "2 + a");
    CHECK(AlphaPoly().is_zero());
  }
}
