#include <doctest.h>

#include <stdexcept>

#include "chainpoly/qpoly.hpp"
#include "chainpoly/series.hpp"

using namespace chainpoly;

TEST_CASE("binomial series") {
  TSeries one = series_binomial(Q(0), 6);
  CHECK(one.coeff(0) == QPoly(1));
  for (int k = 1; k <= 6; ++k) CHECK(one.coeff(k).is_zero());
  TSeries geo = series_binomial(Q(1), 6);
  for (int k = 0; k <= 6; ++k) CHECK(geo.coeff(k) == QPoly(1));
  // gamma = alpha + 1 at alpha = 0 is again the geometric series.
  TSeries g = series_binomial(Q(0) + 1, 5);
  for (int k = 0; k <= 5; ++k) CHECK(g.coeff(k) == QPoly(1));
}

TEST_CASE("exponential and logarithm") {
  TSeries e0 = series_exp(TSeries(8));
  CHECK(e0.coeff(0) == QPoly(1));
  for (int k = 1; k <= 8; ++k) CHECK(e0.coeff(k).is_zero());
  TSeries kernel_arg = series_neg_zt_over_1mt(8);
  TSeries e = series_exp(kernel_arg);
  CHECK(e.coeff(1) == QPoly::monomial(1, Q(-1)));  // -z
  CHECK(series_log1m(5).coeff(3) == QPoly(make_q(-1, 3)));
  CHECK_THROWS_AS(series_exp(TSeries::constant(QPoly(1), 4)), std::invalid_argument);
}

TEST_CASE("products") {
  TSeries a = laguerre_kernel(make_q(3, 2), 6);
  TSeries one = TSeries::constant(QPoly(1), 6);
  CHECK(series_mul(a, one) == a);
  // (1-t)^-1 * (1-t) = 1 within the order.
  TSeries inv = series_binomial(Q(1), 6);
  TSeries lin = TSeries::constant(QPoly(1), 6) - TSeries::monomial(QPoly(1), 1, 6);
  TSeries prod = series_mul(inv, lin);
  CHECK(prod.coeff(0) == QPoly(1));
  for (int k = 1; k <= 6; ++k) CHECK(prod.coeff(k).is_zero());
}

TEST_CASE("Laguerre generating function") {
  TSeries gf = laguerre_kernel(Q(0) + 1, 16);
  CHECK(gf.coeff(2) == QPoly(std::vector<Q>{Q(1), Q(-2), make_q(1, 2)}));
  for (const Q& a : {Q(0), make_q(1, 2), Q(10)}) {
    TSeries g = laguerre_kernel(a + 1, 16);
    for (int k = 0; k <= 16; ++k) CHECK(g.coeff(k) == laguerre(k, a));
  }
}

TEST_CASE("exp is a homomorphism") {
  // a = -zt/(1-t), b = z^2 t^2 scaled; both have zero constant term.
  TSeries a = series_neg_zt_over_1mt(12);
  TSeries b = TSeries::monomial(QPoly::monomial(2, make_q(1, 3)), 2, 12);
  TSeries lhs = series_exp(a + b);
  TSeries rhs = series_mul(series_exp(a), series_exp(b));
  CHECK(lhs == rhs);
}

TEST_CASE("log derivative identity") {
  // d/dt ln(1-t) = -(1-t)^-1
  int order = 10;
  TSeries log = series_log1m(order);
  TSeries inv = series_binomial(Q(1), order - 1);
  for (int k = 0; k < order; ++k)
    CHECK(Q(k + 1) * log.coeff(k + 1) == -inv.coeff(k));
}
