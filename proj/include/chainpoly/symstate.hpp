#pragma once

#include <compare>
#include <map>
#include <string>

#include "chainpoly/qpoly.hpp"

namespace chainpoly {

// Monomial z^i t^n Lam^m where Lam = ln(zt) is a single symbolic atom (the
// two logarithms are never separated: both Euler operators act on Lam
// identically, z d/dz ln(zt) = t d/dt ln(zt) = 1).
struct LogMonomial {
  int zpow = 0;
  int tpow = 0;
  int logpow = 0;  // >= 0
  auto operator<=>(const LogMonomial&) const = default;
};

// Finite Q-linear combination of LogMonomials. Immutable value semantics;
// no zero coefficients are stored, so equality is term-by-term.
class SymExpr {
 public:
  SymExpr() = default;
  static SymExpr term(const LogMonomial& m, const Q& coeff);
  // p(z) * t^tpow * Lam^logpow
  static SymExpr from_poly(const QPoly& p, int tpow, int logpow = 0);

  bool is_zero() const { return terms_.empty(); }
  const std::map<LogMonomial, Q>& terms() const { return terms_; }

  // States of a valid representation never carry negative exponents; the
  // 1/t in the lowering operator can introduce tpow = -1 on raw inputs.
  bool has_negative_powers() const;

  // Coefficient of t^tpow Lam^logpow as a polynomial in z (negative z powers
  // rejected).
  QPoly poly_coeff(int tpow, int logpow) const;

  SymExpr& add_term(const LogMonomial& m, const Q& coeff);
  SymExpr operator-() const;
  SymExpr& operator+=(const SymExpr& rhs);
  SymExpr& operator-=(const SymExpr& rhs);
  SymExpr& operator*=(const Q& scalar);
  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  friend SymExpr operator*(SymExpr a, const Q& s) { return a *= s; }
  friend SymExpr operator*(const Q& s, SymExpr a) { return a *= s; }
  bool operator==(const SymExpr& rhs) const { return terms_ == rhs.terms_; }

  std::string str() const;

 private:
  std::map<LogMonomial, Q> terms_;
};

enum class OpName { T, Eplus, Eminus, Casimir };

// Euler operators z d/dz and t d/dt on the LogMonomial basis:
//   z^i t^n Lam^m -> i z^i t^n Lam^m + m z^i t^n Lam^(m-1)   (euler_z)
//   z^i t^n Lam^m -> n z^i t^n Lam^m + m z^i t^n Lam^(m-1)   (euler_t)
SymExpr euler_z(const SymExpr& s);
SymExpr euler_t(const SymExpr& s);

SymExpr mul_z(const SymExpr& s);
SymExpr mul_t(const SymExpr& s);
SymExpr div_t(const SymExpr& s);

// The realization acting on states:
//   T  = t d/dt + (1+alpha)/2
//   E+ = t (z d/dz + t d/dt + (1+alpha-z))
//   E- = (z d/dz - t d/dt) / t
// Casimir K = T.T + T + E-.E+ applied compositionally.
SymExpr apply(OpName op, const SymExpr& s, const Q& alpha);

// ([a,b] - rhs)(probe) where rhs follows the algebra the realization closes
// into: [T,E+] = E+, [T,E-] = -E-, [E+,E-] = 2T (hence [E-,E+] = -2T).
// Zero for every probe iff the realization is consistent.
SymExpr commutator_residual(OpName a, OpName b, const SymExpr& probe, const Q& alpha);

}  // namespace chainpoly
