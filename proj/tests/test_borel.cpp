#include <doctest.h>

#include <stdexcept>

#include "chainpoly/borel.hpp"

using namespace chainpoly;

namespace {
QPoly lam() { return QPoly::variable(); }
}

TEST_CASE("displayed actions on the generating layer") {
  ModuleSpec nd{BorelCase::nondiagonalizable, 3, 6};
  for (int i = 1; i <= 3; ++i)
    CHECK(act(Gen::e, LatticeVector::basis(i, 0), nd).is_zero());
  // e f v(top, 0) = lambda v(top, 0): the top column has no Jordan shift
  LatticeVector top = LatticeVector::basis(3, 0);
  LatticeVector ef = act(Gen::e, act(Gen::f, top, nd), nd);
  LatticeVector expect = top;
  expect *= lam();
  CHECK(ef == expect);

  ModuleSpec dg{BorelCase::diagonalizable, 4, 6};
  for (int k = 1; k <= 4; ++k) {
    LatticeVector v = LatticeVector::basis(k, 0);
    LatticeVector hv = act(Gen::h, v, dg);
    LatticeVector want = v;
    want *= lam() + QPoly(Q(2 * (k - 1)));
    CHECK(hv == want);
  }
  CHECK(act(Gen::e, LatticeVector::basis(4, 0), dg).is_zero());
  CHECK(act(Gen::e, LatticeVector::basis(2, 0), dg) == LatticeVector::basis(3, 0));
}

TEST_CASE("commutator relations with symbolic lambda") {
  CHECK(commutator_check({BorelCase::nondiagonalizable, 3, 6}).all_pass());
  CHECK(commutator_check({BorelCase::diagonalizable, 4, 6}).all_pass());
  CHECK(commutator_check({BorelCase::nondiagonalizable, 1, 6}).all_pass());
  CHECK(commutator_check({BorelCase::diagonalizable, 1, 6}).all_pass());
  CHECK(commutator_check({BorelCase::nondiagonalizable, 5, 8}).all_pass());
  CHECK(commutator_check({BorelCase::diagonalizable, 5, 8}).all_pass());
}

TEST_CASE("power commutators") {
  for (BorelCase kase : {BorelCase::nondiagonalizable, BorelCase::diagonalizable}) {
    ModuleSpec spec{kase, 5, 8};
    auto rep = power_commutator_check(spec, 4);
    CHECK(rep.all_pass());
    CHECK(rep.checks_run > 0);
  }
  CHECK_THROWS_AS(power_commutator_check({BorelCase::diagonalizable, 2, 4}, 4),
                  std::out_of_range);
}

TEST_CASE("depth cap is an error, not a truncation") {
  ModuleSpec spec{BorelCase::nondiagonalizable, 2, 3};
  LatticeVector v = LatticeVector::basis(1, 3);
  CHECK_THROWS_AS(act(Gen::f, v, spec), std::out_of_range);
  CHECK_THROWS_AS(act(Gen::f, LatticeVector::basis(5, 0), spec), std::out_of_range);
}

TEST_CASE("h block structure") {
  // nondiagonalizable: (h - (lambda-2a))^n kills the depth-a layer, and no
  // earlier power does on the bottom column
  ModuleSpec nd{BorelCase::nondiagonalizable, 3, 5};
  for (int a = 0; a <= 3; ++a) {
    for (int i = 1; i <= 3; ++i) {
      LatticeVector acc = LatticeVector::basis(i, a);
      for (int k = 0; k < 3; ++k) {
        LatticeVector scaled = acc;
        scaled *= lam() - QPoly(Q(2 * a));
        acc = act(Gen::h, acc, nd) - scaled;
      }
      CHECK(acc.is_zero());
    }
    LatticeVector bottom = LatticeVector::basis(1, a);
    LatticeVector once = act(Gen::h, bottom, nd);
    LatticeVector scaled = bottom;
    scaled *= lam() - QPoly(Q(2 * a));
    CHECK_FALSE((once - scaled).is_zero());
  }
  // diagonalizable: h is diagonal on every basis vector
  ModuleSpec dg{BorelCase::diagonalizable, 3, 5};
  for (int i = 1; i <= 3; ++i)
    for (int a = 0; a <= 4; ++a) {
      LatticeVector v = LatticeVector::basis(i, a);
      LatticeVector hv = act(Gen::h, v, dg);
      LatticeVector want = v;
      want *= lam() + QPoly(Q(2 * (i - 1) - 2 * a));
      CHECK(hv == want);
    }
}

TEST_CASE("f has no kernel below the cap") {
  ModuleSpec spec{BorelCase::nondiagonalizable, 3, 5};
  CHECK(f_rank(spec) == 15);
  ModuleSpec dg{BorelCase::diagonalizable, 2, 4};
  CHECK(f_rank(dg) == 8);
}

TEST_CASE("bridge: diagonal single chain recovers the lowest-weight dictionary") {
  Q a = make_q(1, 2);
  DiagChainFamily fam(1, a, {});
  ModuleSpec spec{BorelCase::diagonalizable, 1, 12};
  auto rep = realization_bridge(spec, fam, 10);
  REQUIRE(rep.solved);
  CHECK(rep.lambda_value == -(a + 1));
  // rho_n = (-1)^n / n!
  for (int n = 0; n <= 6; ++n) {
    Q expect = make_q(1, factorial(n));
    if (n % 2 == 1) expect = -expect;
    CHECK(rep.rescaling.at({n, 0}) == expect);
  }
}

TEST_CASE("bridge: two diagonal chains") {
  Q a = make_q(2, 3);
  DiagChainFamily fam(2, a, {Q(1)});
  ModuleSpec spec{BorelCase::diagonalizable, 2, 12};
  auto rep = realization_bridge(spec, fam, 8);
  REQUIRE(rep.solved);
  CHECK(rep.lambda_value == -(a + 3));
  // rho(n, ell) = (-1)^n / (n-ell)!
  for (int ell = 0; ell <= 1; ++ell)
    for (int n = ell; n <= 6; ++n) {
      Q expect = make_q(1, factorial(n - ell));
      if (n % 2 == 1) expect = -expect;
      CHECK(rep.rescaling.at({n, ell}) == expect);
    }
  CHECK_FALSE(rep.notes.empty());  // records the h = +2T obstruction
}

TEST_CASE("bridge: two Jordan chains") {
  Q a = make_q(1, 4);
  JordanChainFamily fam(2, a, {Q(2)});
  ModuleSpec spec{BorelCase::nondiagonalizable, 2, 12};
  auto rep = realization_bridge(spec, fam, 8);
  REQUIRE(rep.solved);
  CHECK(rep.lambda_value == -(a + 1));
  // rho(n, ell) = (-1)^n (-2)^ell / n!
  for (int ell = 0; ell <= 1; ++ell)
    for (int n = 0; n <= 6; ++n) {
      Q expect = make_q(1, factorial(n));
      if (n % 2 == 1) expect = -expect;
      if (ell == 1) expect *= Q(-2);
      CHECK(rep.rescaling.at({n, ell}) == expect);
    }
}

TEST_CASE("bridge guards") {
  DiagChainFamily fam(2, Q(0), {Q(1)});
  ModuleSpec wrong_case{BorelCase::nondiagonalizable, 2, 12};
  CHECK_THROWS_AS(realization_bridge(wrong_case, fam, 6), std::invalid_argument);
  ModuleSpec wrong_size{BorelCase::diagonalizable, 3, 12};
  auto rep = realization_bridge(wrong_size, fam, 6);
  CHECK_FALSE(rep.solved);
  CHECK_FALSE(rep.obstruction.empty());
}
