#include "chainpoly/chain_jordan.hpp"

#include <stdexcept>

namespace chainpoly {

JordanChainFamily::JordanChainFamily(int num_chains, Q alpha, std::vector<Q> sigmas)
    : num_chains_(num_chains), alpha_(std::move(alpha)), sigmas_(std::move(sigmas)) {
  if (num_chains_ < 1) throw std::invalid_argument("JordanChainFamily: N >= 1");
  if (static_cast<int>(sigmas_.size()) < num_chains_ - 1)
    sigmas_.resize(num_chains_ - 1, Q(0));
}

Q JordanChainFamily::sigma(int ell) const {
  if (ell < 1 || ell >= num_chains_)
    throw std::out_of_range("JordanChainFamily::sigma: 1 <= ell < N");
  return sigmas_[ell - 1];
}

const QPoly& JordanChainFamily::omega(int n, int ell) const {
  if (ell < 0 || ell >= num_chains_)
    throw std::out_of_range("JordanChainFamily::omega: 0 <= ell < N");
  if (n < 0) throw std::out_of_range("JordanChainFamily::omega: n >= 0");
  auto key = std::make_pair(n, ell);
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;

  QPoly value;
  if (ell == 0) {
    value = laguerre(n, alpha_);
  } else if (n == 0) {
    value = QPoly(sigma(ell));
  } else {
    const QPoly& prev = omega(n - 1, ell);
    QPoly up = omega_or_zero(n - 1, ell - 1);
    QPoly z = QPoly::variable();
    QPoly raised = z * prev.derivative() + (QPoly(alpha_ + Q(n)) - z) * prev + Q(2) * up;
    // The raising step divides by n; exactness is structural in Q[z].
    value = raised * make_q(1, n);
  }
  return table_.emplace(key, std::move(value)).first->second;
}

void JordanChainFamily::warm(int nmax) const {
  for (int ell = 0; ell < num_chains_; ++ell)
    for (int n = 0; n <= nmax; ++n) omega(n, ell);
}

QPoly JordanChainFamily::omega_or_zero(int n, int ell) const {
  if (n < 0 || ell < 0) return QPoly();
  return omega(n, ell);
}

SymExpr JordanChainFamily::state(int n, int ell) const {
  if (ell < 0 || ell >= num_chains_)
    throw std::out_of_range("JordanChainFamily::state: 0 <= ell < N");
  SymExpr s;
  for (int j = 0; j <= ell; ++j) {
    int lpow = ell - j;
    SymExpr part = SymExpr::from_poly(omega(n, j), n, lpow);
    s += make_q(1, factorial(lpow)) * part;
  }
  return s;
}

QPoly closed_form_omega1(int n, const Q& alpha, const Q& sigma1) {
  QPoly w = sigma1 * laguerre(n, alpha);
  for (int m = 1; m <= n; ++m) w += make_q(2, m) * laguerre(n - m, alpha);
  return w;
}

QPoly closed_form_omega2(int n, const Q& alpha, const Q& sigma1, const Q& sigma2) {
  QPoly w = sigma2 * laguerre(n, alpha);
  for (int m = 1; m <= n; ++m)
    w += Q((2 * sigma1 + 4 * harmonic(m - 1)) / Q(m)) * laguerre(n - m, alpha);
  // Cross-check the harmonic rewrite against the literal inner sum.
  QPoly check = sigma2 * laguerre(n, alpha);
  for (int m = 1; m <= n; ++m) {
    Q inner(0);
    for (int k = 1; k <= m - 1; ++k) inner += make_q(4, k);
    check += Q((2 * sigma1 + inner) / Q(m)) * laguerre(n - m, alpha);
  }
  if (!(w == check)) throw std::logic_error("closed_form_omega2: internal form mismatch");
  return w;
}

QPoly ode_residual_jordan(const JordanChainFamily& fam, int n, int ell) {
  if (ell < 1) throw std::invalid_argument("ode_residual_jordan: ell >= 1");
  const QPoly& w = fam.omega(n, ell);
  QPoly up = fam.omega(n, ell - 1);
  QPoly z = QPoly::variable();
  return z * w.derivative().derivative() + (QPoly(fam.alpha() + 1) - z) * w.derivative() +
         Q(n) * w + Q(2) * up.derivative();
}

QPoly lowering_residual_jordan(const JordanChainFamily& fam, int n, int ell) {
  if (n < 1) throw std::invalid_argument("lowering_residual_jordan: n >= 1");
  const QPoly& w = fam.omega(n, ell);
  QPoly z = QPoly::variable();
  return z * w.derivative() - Q(n) * w + Q(fam.alpha() + Q(n)) * fam.omega(n - 1, ell) +
         Q(2) * fam.omega_or_zero(n - 1, ell - 1);
}

TSeries genfunc_jordan(const JordanChainFamily& fam, int ell, int order) {
  if (order < 1) throw std::invalid_argument("genfunc_jordan: order >= 1");
  if (ell < 0 || ell > 2)
    throw std::invalid_argument("genfunc_jordan: closed forms exist for ell <= 2 only");
  TSeries kernel = laguerre_kernel(fam.alpha() + 1, order);
  if (ell == 0) return kernel;
  TSeries log = series_log1m(order);
  if (ell == 1) {
    TSeries pre = TSeries::constant(QPoly(fam.sigma(1)), order) - Q(2) * QPoly(1) * log;
    return series_mul(pre, kernel);
  }
  TSeries pre = TSeries::constant(QPoly(fam.sigma(2)), order);
  pre -= Q(2) * QPoly(fam.sigma(1)) * log;
  pre += Q(2) * QPoly(1) * series_mul(log, log);
  return series_mul(pre, kernel);
}

SymExpr exp_Eplus_apply(const SymExpr& s, const Q& u, int order, const Q& alpha) {
  if (order < 0) throw std::invalid_argument("exp_Eplus_apply: order >= 0");
  SymExpr acc = s;
  SymExpr power = s;
  Q upow(1);
  for (int k = 1; k <= order; ++k) {
    power = apply(OpName::Eplus, power, alpha);
    upow *= u;
    acc += Q(upow / Q(factorial(k))) * power;
  }
  return acc;
}

KetActionReport verify_ket_actions_jordan(const JordanChainFamily& fam, int nmax) {
  KetActionReport report;
  const Q& a = fam.alpha();
  auto state_or_zero = [&](int n, int ell) -> SymExpr {
    if (n < 0 || ell < 0) return SymExpr();
    return fam.state(n, ell);
  };
  auto note = [&](int n, int ell, const char* op, const SymExpr& residual) {
    ++report.checks_run;
    if (!residual.is_zero()) report.failures.push_back({n, ell, op, residual.str()});
  };
  for (int ell = 0; ell < fam.num_chains(); ++ell) {
    for (int n = 0; n <= nmax; ++n) {
      SymExpr st = fam.state(n, ell);
      Q tau = Q(n) + (a + 1) / 2;
      note(n, ell, "T",
           apply(OpName::T, st, a) - tau * st - state_or_zero(n, ell - 1));
      note(n, ell, "E+",
           apply(OpName::Eplus, st, a) - Q(n + 1) * fam.state(n + 1, ell));
      note(n, ell, "E-",
           apply(OpName::Eminus, st, a) + Q(a + Q(n)) * state_or_zero(n - 1, ell) +
               Q(2) * state_or_zero(n - 1, ell - 1));
      note(n, ell, "K",
           apply(OpName::Casimir, st, a) - Q((a * a - 1) / 4) * st -
               a * state_or_zero(n, ell - 1) - state_or_zero(n, ell - 2));
    }
  }
  return report;
}

}  // namespace chainpoly
