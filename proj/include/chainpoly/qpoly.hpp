#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chainpoly/rational.hpp"

namespace chainpoly {

// Dense univariate polynomial over Q. Trailing zero coefficients are
// stripped; the zero polynomial is the empty coefficient vector and has
// degree() == -1. All arithmetic is exact.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Q& constant);  // NOLINT: implicit by design, Q embeds in Q[z]
  QPoly(long constant);      // NOLINT
  explicit QPoly(std::vector<Q> coeffs);

  static QPoly variable();
  static QPoly monomial(int power, const Q& coeff);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Q& coeff(int power) const;  // 0 beyond the degree
  const Q& leading() const;         // nonzero polynomials only
  const std::vector<Q>& coeffs() const { return coeffs_; }

  QPoly derivative() const;
  Q eval(const Q& x) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const Q& scalar);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator*(QPoly a, const Q& s) { return a *= s; }
  friend QPoly operator*(const Q& s, QPoly a) { return a *= s; }
  bool operator==(const QPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  std::string str(std::string_view var = "z") const;

 private:
  std::vector<Q> coeffs_;
  void normalize();
};

// Quotient and remainder with deg(rem) < deg(divisor). Divisor must be nonzero.
std::pair<QPoly, QPoly> divrem(const QPoly& num, const QPoly& den);

// Division known to be exact; throws std::logic_error on a nonzero remainder.
QPoly exact_div(const QPoly& num, const QPoly& den);

// Monic greatest common divisor (gcd(0,0) = 0).
QPoly poly_gcd(const QPoly& a, const QPoly& b);

// p with all multiplicities reduced to one.
QPoly squarefree_part(const QPoly& p);

// Squarefree decomposition p = lc * prod f_i^i (Yun); returns the list of
// (f_i, i) with deg f_i >= 1.
std::vector<std::pair<QPoly, int>> squarefree_decompose(const QPoly& p);

// Generalized Laguerre polynomial from the terminating hypergeometric sum:
// coefficient of z^k is (-1)^k/k! * (alpha+k+1)_{n-k}/(n-k)!.
QPoly laguerre(unsigned n, const Q& alpha);

// z p'' + (1+alpha-z) p' + n p; the zero polynomial iff p solves the
// index-n equation.
QPoly laguerre_ode_residual(const QPoly& p, unsigned n, const Q& alpha);

// (n+1) L_{n+1} = (2n+1+alpha-z) L_n - (n+alpha) L_{n-1}, as an exact
// polynomial identity. n >= 1.
bool three_term_check(unsigned n, const Q& alpha);

}  // namespace chainpoly
