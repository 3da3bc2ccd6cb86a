#include "chainpoly/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace chainpoly {

TSeries::TSeries(int order) {
  if (order < 0) throw std::invalid_argument("TSeries: negative order");
  coeffs_.resize(order + 1);
}

TSeries TSeries::constant(const QPoly& p, int order) {
  TSeries s(order);
  s.coeffs_[0] = p;
  return s;
}

TSeries TSeries::monomial(const QPoly& p, int tpow, int order) {
  if (tpow < 0) throw std::invalid_argument("TSeries::monomial: negative power");
  TSeries s(order);
  if (tpow <= order) s.coeffs_[tpow] = p;
  return s;
}

const QPoly& TSeries::coeff(int k) const {
  if (k < 0 || k > order()) throw std::out_of_range("TSeries::coeff");
  return coeffs_[k];
}

void TSeries::set_coeff(int k, QPoly p) {
  if (k < 0 || k > order()) throw std::out_of_range("TSeries::set_coeff");
  coeffs_[k] = std::move(p);
}

TSeries& TSeries::operator+=(const TSeries& rhs) {
  int n = std::min(order(), rhs.order());
  coeffs_.resize(n + 1);
  for (int k = 0; k <= n; ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& rhs) {
  int n = std::min(order(), rhs.order());
  coeffs_.resize(n + 1);
  for (int k = 0; k <= n; ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TSeries& TSeries::operator*=(const QPoly& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TSeries series_mul(const TSeries& a, const TSeries& b) {
  int n = std::min(a.order(), b.order());
  TSeries out(n);
  for (int k = 0; k <= n; ++k) {
    QPoly acc;
    for (int i = 0; i <= k; ++i) acc += a.coeff(i) * b.coeff(k - i);
    out.set_coeff(k, std::move(acc));
  }
  return out;
}

TSeries series_binomial(const Q& gamma, int order) {
  TSeries out(order);
  for (int k = 0; k <= order; ++k)
    out.set_coeff(k, QPoly(Q(pochhammer(gamma, k) / Q(factorial(k)))));
  return out;
}

TSeries series_exp(const TSeries& arg) {
  if (!arg.coeff(0).is_zero())
    throw std::invalid_argument("series_exp: nonzero constant term");
  int n = arg.order();
  TSeries out(n);
  out.set_coeff(0, QPoly(1));
  // k E_k = sum_{j=1}^{k} j A_j E_{k-j}, from E' = A' E.
  for (int k = 1; k <= n; ++k) {
    QPoly acc;
    for (int j = 1; j <= k; ++j) acc += Q(j) * arg.coeff(j) * out.coeff(k - j);
    out.set_coeff(k, acc * make_q(1, k));
  }
  return out;
}

TSeries series_log1m(int order) {
  TSeries out(order);
  for (int k = 1; k <= order; ++k) out.set_coeff(k, QPoly(make_q(-1, k)));
  return out;
}

TSeries series_neg_zt_over_1mt(int order) {
  TSeries out(order);
  QPoly neg_z = QPoly::monomial(1, Q(-1));
  for (int k = 1; k <= order; ++k) out.set_coeff(k, neg_z);
  return out;
}

TSeries laguerre_kernel(const Q& gamma, int order) {
  return series_mul(series_binomial(gamma, order), series_exp(series_neg_zt_over_1mt(order)));
}

}  // namespace chainpoly
