#include <doctest.h>

#include <stdexcept>

#include "chainpoly/rational.hpp"

using namespace chainpoly;

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(Q(3), 0) == Q(1));
  CHECK(pochhammer(Q(1), 4) == Q(24));
  CHECK(pochhammer(make_q(1, 2), 2) == make_q(3, 4));
}

TEST_CASE("pochhammer splitting identity") {
  for (const Q& a : {Q(2), make_q(1, 2), make_q(-7, 3)}) {
    for (unsigned j = 0; j <= 20; ++j)
      for (unsigned k = 0; k + j <= 20; ++k)
        CHECK(pochhammer(a, j + k) ==
              pochhammer(a, j) * pochhammer(a + Q(static_cast<long>(j)), k));
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == Q(0));
  CHECK(harmonic(3) == make_q(11, 6));
  for (unsigned m = 1; m <= 50; ++m) CHECK(harmonic(m) - harmonic(m - 1) == make_q(1, m));
}

TEST_CASE("moments in units of Gamma(alpha+1)") {
  CHECK(moment(0, make_q(7, 5)) == Q(1));
  CHECK(moment(2, Q(0)) == Q(2));
  CHECK(moment(1, Q(10)) == Q(11));
  for (unsigned k = 0; k <= 12; ++k) {
    Q alpha = make_q(3, 7);
    CHECK(moment(k + 1, alpha) == (alpha + Q(static_cast<long>(k)) + 1) * moment(k, alpha));
  }
  CHECK_THROWS_AS(moment(1, Q(-1)), std::domain_error);
  CHECK_THROWS_AS(moment(0, make_q(-3, 2)), std::domain_error);
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_q("3") == Q(3));
  CHECK(parse_q("-3/6") == make_q(-1, 2));
  CHECK(q_str(make_q(4, -6)) == "-2/3");
  CHECK(q_str(parse_q("10/5")) == "2");
  CHECK(make_q(2, 6) == make_q(1, 3));
  CHECK_THROWS_AS(parse_q("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_q("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_q(""), std::invalid_argument);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(4, 7) == 0);
}
