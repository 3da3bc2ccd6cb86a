#pragma once

#include <vector>

#include "chainpoly/qpoly.hpp"

namespace chainpoly {

// Truncated power series in t with QPoly coefficients: exact within the
// stated order, which is the backbone of every generating-function check.
// Binary operations truncate to the smaller operand order.
class TSeries {
 public:
  explicit TSeries(int order);  // zero series
  static TSeries constant(const QPoly& p, int order);
  static TSeries monomial(const QPoly& p, int tpow, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const QPoly& coeff(int k) const;
  void set_coeff(int k, QPoly p);

  TSeries& operator+=(const TSeries& rhs);
  TSeries& operator-=(const TSeries& rhs);
  TSeries& operator*=(const QPoly& scalar);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(TSeries a, const QPoly& s) { return a *= s; }
  friend TSeries operator*(const QPoly& s, TSeries a) { return a *= s; }
  bool operator==(const TSeries& rhs) const { return coeffs_ == rhs.coeffs_; }

 private:
  std::vector<QPoly> coeffs_;  // index = power of t
};

// Cauchy product, truncated to the smaller order.
TSeries series_mul(const TSeries& a, const TSeries& b);

// (1-t)^(-gamma) = sum_k (gamma)_k / k! t^k.
TSeries series_binomial(const Q& gamma, int order);

// exp of a series with zero constant term, via the derivative recurrence.
TSeries series_exp(const TSeries& arg);

// ln(1-t) = -sum_{k>=1} t^k / k.
TSeries series_log1m(int order);

// -z t / (1-t) = sum_{k>=1} (-z) t^k: the exponent of the Laguerre kernel.
TSeries series_neg_zt_over_1mt(int order);

// (1-t)^(-gamma) exp(-zt/(1-t)); coefficient of t^k is the degree-k Laguerre
// polynomial for gamma = alpha+1.
TSeries laguerre_kernel(const Q& gamma, int order);

}  // namespace chainpoly
