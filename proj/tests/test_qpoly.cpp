#include <doctest.h>

#include <stdexcept>

#include "chainpoly/qpoly.hpp"

using namespace chainpoly;

namespace {
QPoly zvar() { return QPoly::variable(); }
}

TEST_CASE("laguerre low orders") {
  CHECK(laguerre(0, make_q(9, 4)) == QPoly(1));
  Q a = make_q(1, 3);
  CHECK(laguerre(1, a) == QPoly(a + 1) - zvar());
  // 1 - 2z + z^2/2 at alpha = 0
  CHECK(laguerre(2, Q(0)) == QPoly(std::vector<Q>{Q(1), Q(-2), make_q(1, 2)}));
}

TEST_CASE("laguerre degree and leading coefficient") {
  for (unsigned n = 0; n <= 10; ++n) {
    QPoly L = laguerre(n, make_q(5, 7));
    CHECK(L.degree() == static_cast<int>(n));
    Q lead = make_q(1, factorial(n));
    if (n % 2 == 1) lead = -lead;
    CHECK(L.leading() == lead);
  }
}

TEST_CASE("laguerre value at the origin") {
  for (const Q& a : {Q(0), make_q(1, 2), Q(10)})
    for (unsigned n = 0; n <= 25; ++n)
      CHECK(laguerre(n, a).eval(Q(0)) == pochhammer(a + 1, n) / Q(factorial(n)));
}

TEST_CASE("laguerre differential equation") {
  CHECK(laguerre_ode_residual(laguerre(5, Q(2)), 5, Q(2)).is_zero());
  CHECK(laguerre_ode_residual(QPoly(1), 0, make_q(-1, 3)).is_zero());
  // z p'' + (1+alpha-z) p' + n p at p = z, n = 1, alpha = 0 leaves 1.
  CHECK(laguerre_ode_residual(zvar(), 1, Q(0)) == QPoly(1));
  for (unsigned n = 0; n <= 16; ++n)
    CHECK(laguerre_ode_residual(laguerre(n, make_q(1, 2)), n, make_q(1, 2)).is_zero());
}

TEST_CASE("three-term recurrence") {
  CHECK(three_term_check(1, Q(0)));
  CHECK(three_term_check(1, make_q(1, 3)));
  CHECK(three_term_check(10, Q(10)));
  for (unsigned n = 1; n <= 16; ++n) CHECK(three_term_check(n, make_q(-2, 5)));
  CHECK_THROWS_AS(three_term_check(0, Q(0)), std::invalid_argument);
}

TEST_CASE("derivative lowers into the partial sum") {
  // d/dz L_n = -sum_{k<n} L_k
  for (const Q& a : {Q(0), make_q(3, 2)}) {
    for (unsigned n = 0; n <= 25; ++n) {
      QPoly sum;
      for (unsigned k = 0; k < n; ++k) sum += laguerre(k, a);
      CHECK(laguerre(n, a).derivative() == -sum);
    }
  }
}

TEST_CASE("division and gcd") {
  QPoly a = (zvar() - QPoly(1)) * (zvar() + QPoly(2)) * (zvar() - QPoly(5));
  QPoly b = (zvar() - QPoly(1)) * (zvar() + QPoly(3));
  auto [q, r] = divrem(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(poly_gcd(a, b) == zvar() - QPoly(1));
  CHECK_THROWS_AS(exact_div(a, b), std::logic_error);
  CHECK(exact_div(a * b, b) == a);
  CHECK(poly_gcd(QPoly(), QPoly()).is_zero());
}

TEST_CASE("squarefree machinery") {
  QPoly p = (zvar() - QPoly(1)) * (zvar() - QPoly(1)) * (zvar() + QPoly(2));
  QPoly sf = squarefree_part(p);
  CHECK(sf.degree() == 2);
  CHECK(sf.eval(Q(1)) == Q(0));
  CHECK(sf.eval(Q(-2)) == Q(0));

  QPoly big = (zvar() - QPoly(1)) * (zvar() - QPoly(1)) * (zvar() - QPoly(1)) *
              (zvar() + QPoly(2)) * (zvar() + QPoly(2)) * (zvar() - QPoly(5));
  auto factors = squarefree_decompose(big);
  REQUIRE(factors.size() == 3);
  for (const auto& [f, mult] : factors) {
    if (mult == 1) CHECK(f.eval(Q(5)) == Q(0));
    if (mult == 2) CHECK(f.eval(Q(-2)) == Q(0));
    if (mult == 3) CHECK(f.eval(Q(1)) == Q(0));
    CHECK(f.degree() == 1);
  }
}

TEST_CASE("pretty printing") {
  CHECK(QPoly(std::vector<Q>{Q(-2), Q(1)}).str() == "z - 2");
  CHECK(QPoly(std::vector<Q>{Q(0), make_q(1, 2)}).str() == "1/2*z");
  CHECK(QPoly().str() == "0");
}

TEST_CASE("monomial guards") {
  CHECK_THROWS_AS(QPoly::monomial(-1, Q(1)), std::invalid_argument);
  CHECK(QPoly::monomial(3, Q(0)).is_zero());
  CHECK_THROWS_AS(QPoly().leading(), std::logic_error);
}
