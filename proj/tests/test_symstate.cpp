#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chainpoly/qpoly.hpp"
#include "chainpoly/symstate.hpp"

using namespace chainpoly;

namespace {

SymExpr mono(int zp, int tp, int lp, const Q& c = Q(1)) {
  return SymExpr::term({zp, tp, lp}, c);
}

SymExpr random_probe(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> zp(0, 6), tp(0, 6), lp(0, 3);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  SymExpr s;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    long nu = num(rng);
    if (nu == 0) nu = 1;
    s.add_term({zp(rng), tp(rng), lp(rng)}, make_q(nu, den(rng)));
  }
  return s;
}

}  // namespace

TEST_CASE("Euler operators on the log basis") {
  CHECK(euler_z(mono(2, 0, 0)) == Q(2) * mono(2, 0, 0));
  CHECK(euler_z(mono(0, 0, 1)) == mono(0, 0, 0));  // z d/dz ln(zt) = 1
  CHECK(euler_t(mono(1, 1, 2)) == mono(1, 1, 2) + Q(2) * mono(1, 1, 1));
  CHECK(euler_z(mono(1, 1, 2)) == mono(1, 1, 2) + Q(2) * mono(1, 1, 1));
}

TEST_CASE("operator actions on simple states") {
  Q a = make_q(2, 3);
  // T is diagonal on t^n p(z): eigenvalue n + (1+alpha)/2.
  SymExpr s = SymExpr::from_poly(laguerre(3, a), 4);
  CHECK(apply(OpName::T, s, a) == Q(Q(4) + (a + 1) / 2) * s);
  // E+ on the constant state gives L_1 * t.
  CHECK(apply(OpName::Eplus, SymExpr::from_poly(QPoly(1), 0), a) ==
        SymExpr::from_poly(laguerre(1, a), 1));
  CHECK(apply(OpName::Eminus, SymExpr::from_poly(QPoly(1), 0), a).is_zero());
}

TEST_CASE("commutator residuals vanish") {
  Q a = make_q(7, 2);
  CHECK(commutator_residual(OpName::Eminus, OpName::Eplus, mono(3, 2, 1), Q(5)).is_zero());
  CHECK(commutator_residual(OpName::T, OpName::Eplus, mono(0, 0, 0), Q(0)).is_zero());
  CHECK(commutator_residual(OpName::T, OpName::Eminus, mono(1, 1, 2), a).is_zero());
  std::mt19937_64 rng(12345);
  for (const Q& alpha : {Q(0), make_q(-3, 7)}) {
    for (int i = 0; i < 50; ++i) {
      SymExpr probe = random_probe(rng);
      CHECK(commutator_residual(OpName::T, OpName::Eplus, probe, alpha).is_zero());
      CHECK(commutator_residual(OpName::T, OpName::Eminus, probe, alpha).is_zero());
      CHECK(commutator_residual(OpName::Eminus, OpName::Eplus, probe, alpha).is_zero());
      // Order flip exercises the antisymmetric table.
      CHECK(commutator_residual(OpName::Eplus, OpName::Eminus, probe, alpha).is_zero());
    }
  }
  CHECK_THROWS_AS(commutator_residual(OpName::Casimir, OpName::T, mono(0, 0, 0), Q(0)),
                  std::invalid_argument);
}

TEST_CASE("apply is Q-linear") {
  std::mt19937_64 rng(99);
  Q a = make_q(5, 4);
  for (int i = 0; i < 20; ++i) {
    SymExpr s1 = random_probe(rng), s2 = random_probe(rng);
    Q c1 = make_q(3, 7), c2 = make_q(-2, 5);
    for (OpName op : {OpName::T, OpName::Eplus, OpName::Eminus, OpName::Casimir}) {
      CHECK(apply(op, c1 * s1 + c2 * s2, a) ==
            c1 * apply(op, s1, a) + c2 * apply(op, s2, a));
    }
  }
}

TEST_CASE("Casimir commutes with the generators") {
  std::mt19937_64 rng(7);
  Q a = make_q(1, 2);
  for (int i = 0; i < 25; ++i) {
    SymExpr probe = random_probe(rng);
    for (OpName g : {OpName::T, OpName::Eplus, OpName::Eminus}) {
      SymExpr lhs = apply(OpName::Casimir, apply(g, probe, a), a);
      SymExpr rhs = apply(g, apply(OpName::Casimir, probe, a), a);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("negative powers are representable and flagged") {
  SymExpr raw = apply(OpName::Eminus, mono(2, 0, 0), Q(0));
  CHECK(raw.has_negative_powers());  // 2 z^2 / t
  CHECK(raw == Q(2) * mono(2, -1, 0));
  CHECK_FALSE(mono(1, 0, 2).has_negative_powers());
}

TEST_CASE("poly_coeff extraction") {
  SymExpr s = SymExpr::from_poly(laguerre(2, Q(0)), 3, 1) + mono(0, 1, 0, Q(5));
  CHECK(s.poly_coeff(3, 1) == laguerre(2, Q(0)));
  CHECK(s.poly_coeff(1, 0) == QPoly(5));
  CHECK(s.poly_coeff(2, 0).is_zero());
}

TEST_CASE("self-aliasing compound assignment") {
  SymExpr s = mono(1, 2, 1, make_q(3, 2)) + mono(0, 0, 0, Q(5));
  SymExpr doubled = s;
  doubled += doubled;
  CHECK(doubled == Q(2) * s);
  SymExpr gone = s;
  gone -= gone;
  CHECK(gone.is_zero());
}
