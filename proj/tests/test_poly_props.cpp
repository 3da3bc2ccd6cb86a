#include <doctest.h>

#include <stdexcept>

#include "chainpoly/poly_props.hpp"

using namespace chainpoly;

namespace {
QPoly zvar() { return QPoly::variable(); }
}

TEST_CASE("derivative-difference relation") {
  JordanChainFamily fam(2, make_q(2, 3), {Q(4)});
  CHECK(recurdiff_residual(fam, 0).is_zero());
  JordanChainFamily fam2(2, Q(2), {Q(3)});
  CHECK(recurdiff_residual(fam2, 5).is_zero());
  for (int n = 0; n <= 20; ++n) CHECK(recurdiff_residual(fam, n).is_zero());
  CHECK(recurdiff_summed_residual(fam, 6).is_zero());
  for (int k = 0; k <= 20; ++k) CHECK(recurdiff_summed_residual(fam2, k).is_zero());
}

TEST_CASE("mixed recurrence with Laguerre tail") {
  JordanChainFamily a(2, Q(0), {Q(0)});
  JordanChainFamily b(2, Q(0), {Q(1)});
  CHECK(mixed_recurrence_residual_jordan(a, 1).is_zero());
  CHECK(mixed_recurrence_residual_jordan(b, 1).is_zero());
  JordanChainFamily c(2, make_q(5, 3), {Q(-2)});
  CHECK(mixed_recurrence_residual_jordan(c, 7).is_zero());
  for (int n = 1; n <= 20; ++n) CHECK(mixed_recurrence_residual_jordan(c, n).is_zero());
}

TEST_CASE("fourth-order operator: reference vs corrected") {
  JordanChainFamily plain(2, Q(0), {Q(0)});
  // the reference coefficient set leaves 4z - 8 at n = 3
  CHECK(fourth_order_residual(plain, 3) == QPoly(std::vector<Q>{Q(-8), Q(4)}));
  CHECK(fourth_order_residual(plain, 0).is_zero());
  CHECK(fourth_order_residual(plain, 1).is_zero());
  struct P { Q alpha, s1; };
  for (const P& p : {P{Q(0), Q(0)}, P{Q(10), Q(2)}, P{make_q(1, 2), make_q(3, 7)}}) {
    JordanChainFamily fam(2, p.alpha, {p.s1});
    for (int n = 0; n <= 20; ++n) CHECK(fourth_order_corrected_residual(fam, n).is_zero());
    auto fit = fit_fourth_order_correction(fam, 2, 10);
    CHECK(fit.solved);
    CHECK_FALSE(fit.reference_exact);
    CHECK(fit.delta1 == Q(-2));
    CHECK(fit.delta0 == (p.alpha + 2) * (p.alpha + 2));
    // corrected operator re-verified beyond the fit window
    for (int n = 11; n <= 20; ++n) CHECK(fourth_order_corrected_residual(fam, n).is_zero());
  }
}

TEST_CASE("third-order operator: reference vs corrected") {
  {
    DiagChainFamily fam(2, Q(7), {make_q(5, 3)});
    // at n = 1 the reference operator leaves the constant -sigma1
    CHECK(third_order_residual(fam, 1) == QPoly(make_q(-5, 3)));
    CHECK(third_order_corrected_residual(fam, 1).is_zero());
  }
  {
    DiagChainFamily fam(2, Q(10), {Q(2)});
    CHECK(third_order_residual(fam, 2) == QPoly(std::vector<Q>{Q(-27), Q(-12)}));
  }
  struct P { Q alpha, s1; };
  const P sets[] = {P{Q(0), Q(0)}, P{Q(10), Q(2)}, P{make_q(1, 2), make_q(3, 7)},
                    P{make_q(3, 2), make_q(2, 5)}};  // last: sigma1 = 1/(1+alpha)
  for (const P& p : sets) {
    DiagChainFamily fam(2, p.alpha, {p.s1});
    for (int n = 1; n <= 20; ++n) CHECK(third_order_corrected_residual(fam, n).is_zero());
    auto fit = fit_third_order_correction(fam, 1, 10);
    CHECK(fit.solved);
    CHECK(fit.delta0 == Q(1));
    CHECK(fit.delta1 == Q(-2) * p.s1);
    for (int n = 11; n <= 20; ++n) CHECK(third_order_corrected_residual(fam, n).is_zero());
  }
}

TEST_CASE("partner polynomials") {
  CHECK(partner_q_jordan(0, make_q(8, 3)) == QPoly(1));
  Q a = make_q(1, 2);
  CHECK(partner_q_jordan(1, a) == QPoly(1) - make_q(2, 3) * zvar());
  // proportional to the matching Laguerre polynomial
  for (const Q& al : {make_q(1, 2), Q(2), Q(10)})
    for (int m = 0; m <= 12; ++m)
      CHECK(partner_q_jordan(m, al) ==
            Q(Q(factorial(m)) / pochhammer(al + 1, m)) * laguerre(m, al));
  // (1+alpha)_k vanishes for integer alpha <= -1
  CHECK_THROWS_WITH_AS(partner_q_jordan(3, Q(-2)), doctest::Contains("k = 2"),
                       std::invalid_argument);

  Q s1 = Q(1), al = Q(2);
  QPoly q1 = partner_q_diag(1, al, s1);
  Q factor = (s1 + al * s1 - 1) / ((al + 1) * (2 * s1 + al * s1 - 1));
  CHECK(q1 == QPoly(1) - factor * zvar());
  // sigma1 (1 + alpha) = 1 zeroes the k = 0 denominator
  CHECK_THROWS_WITH_AS(partner_q_diag(2, Q(1), make_q(1, 2)), doctest::Contains("k = 0"),
                       std::invalid_argument);
  // -1 + 2 sigma1 + alpha sigma1 = 0 zeroes the k = 1 denominator
  CHECK_THROWS_WITH_AS(partner_q_diag(2, Q(2), make_q(1, 4)), doctest::Contains("k = 1"),
                       std::invalid_argument);
}

TEST_CASE("biorthogonality by exact moment contraction") {
  struct P { Q alpha, s1; };
  for (const P& p : {P{make_q(1, 2), Q(1)}, P{Q(2), make_q(1, 3)}, P{Q(10), Q(2)}}) {
    JordanChainFamily fam(2, p.alpha, {p.s1});
    for (int m = 0; m <= 12; ++m)
      for (int n = 0; n < m; ++n) CHECK(biorth_inner(fam, n, m).value == 0);
    // the diagonal collapses to the seed itself
    for (int m = 0; m <= 8; ++m) CHECK(biorth_inner(fam, m, m).value == p.s1);
  }
  for (const P& p : {P{make_q(1, 2), Q(1)}, P{Q(2), Q(1)}, P{Q(10), Q(2)}}) {
    DiagChainFamily fam(2, p.alpha, {p.s1});
    for (int m = 1; m <= 12; ++m)
      for (int n = 1; n <= m; ++n) CHECK(biorth_inner(fam, n, m).value == 0);
    // just above the diagonal the products are generically nonzero
    CHECK(biorth_inner(fam, 2, 1).value != 0);
  }
  DiagChainFamily fam(2, Q(2), {Q(1)});
  CHECK_THROWS_AS(biorth_inner(fam, 0, 1), std::invalid_argument);
}

TEST_CASE("certified zeros for the displayed parameter sets") {
  {
    JordanChainFamily fam(2, Q(10), {Q(2)});
    RootReport rep = zeros_report(fam, 6, make_q(1, 1 << 20));
    CHECK(rep.degree == 6);
    CHECK(rep.real_root_count == 6);
    CHECK(rep.all_real);
  }
  {
    DiagChainFamily fam(2, Q(10), {Q(2)});
    RootReport rep = zeros_report(fam, 8, make_q(1, 1 << 20));
    CHECK(rep.degree == 8);
    CHECK(rep.all_real);
  }
  {
    DiagChainFamily fam(2, make_q(1, 1000), {make_q(1, 1000)});
    RootReport rep = zeros_report(fam, 20, make_q(1, 1 << 20));
    CHECK(rep.degree == 20);
    CHECK(rep.all_real);
  }
  {
    // constant chain polynomial is rejected
    JordanChainFamily fam(2, Q(0), {Q(0)});
    CHECK_THROWS_AS(zeros_report(fam, 1, make_q(1, 4)), std::invalid_argument);
    CHECK_THROWS_AS(zeros_report(fam, 0, make_q(1, 4)), std::invalid_argument);
  }
  {
    // n = 1 diagonal with sigma1 = 1: single root exactly at 1
    DiagChainFamily fam(2, Q(3), {Q(1)});
    RootReport rep = zeros_report(fam, 1, make_q(1, 1024));
    REQUIRE(rep.roots.size() == 1);
    CHECK(rep.roots[0].lo <= Q(1));
    CHECK(Q(1) <= rep.roots[0].hi);
  }
}
