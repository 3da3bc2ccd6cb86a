#pragma once

#include <map>
#include <string>
#include <vector>

#include "chainpoly/qpoly.hpp"
#include "chainpoly/series.hpp"
#include "chainpoly/symstate.hpp"

namespace chainpoly {

// One failed identity inside a ket-action sweep.
struct KetFailure {
  int n;
  int ell;
  std::string op;
  std::string detail;
};

struct KetActionReport {
  std::vector<KetFailure> failures;
  int checks_run = 0;
  bool all_pass() const { return failures.empty(); }
};

// The family with a non-diagonalizable Cartan action: N coupled chains of
// polynomials omega_{n,ell} where level ell = 0 is the Laguerre chain and
// higher ell sit further from it. States carry powers of Lam = ln(zt):
//
//   |n,ell> = t^n sum_{j=0}^{ell} omega_{n,j}(z) Lam^(ell-j) / (ell-j)!
//
// Chains are seeded by free constants omega_{0,ell} = sigma_ell and grown by
// the raising recursion
//
//   (n+1) omega_{n+1,ell} = z omega'_{n,ell} + (n+alpha+1-z) omega_{n,ell}
//                           + 2 omega_{n,ell-1}.
class JordanChainFamily {
 public:
  JordanChainFamily(int num_chains, Q alpha, std::vector<Q> sigmas);

  int num_chains() const { return num_chains_; }
  const Q& alpha() const { return alpha_; }
  Q sigma(int ell) const;  // seed of chain ell >= 1

  // Memoized omega_{n,ell}; requires 0 <= ell < N, n >= 0.
  const QPoly& omega(int n, int ell) const;
  // Fills the table through n <= nmax; after this, omega() on the filled
  // range is a pure read and safe to share across threads.
  void warm(int nmax) const;
  // Zero for out-of-range indices (n < 0 or ell < 0); otherwise omega().
  QPoly omega_or_zero(int n, int ell) const;

  // |n,ell> as a symbolic state.
  SymExpr state(int n, int ell) const;

 private:
  int num_chains_;
  Q alpha_;
  std::vector<Q> sigmas_;
  mutable std::map<std::pair<int, int>, QPoly> table_;
};

// sigma1 L_n + sum_{m=1}^{n} (2/m) L_{n-m}.
QPoly closed_form_omega1(int n, const Q& alpha, const Q& sigma1);

// sigma2 L_n + sum_{m=1}^{n} ((2 sigma1 + 4 H_{m-1}) / m) L_{n-m}; the inner
// sum form (sum_{k<m} 4/k) is recomputed and cross-checked internally.
QPoly closed_form_omega2(int n, const Q& alpha, const Q& sigma1, const Q& sigma2);

// z w''_{n,ell} + (1+alpha-z) w'_{n,ell} + n w_{n,ell} + 2 w'_{n,ell-1};
// identically zero on the family. ell >= 1.
QPoly ode_residual_jordan(const JordanChainFamily& fam, int n, int ell);

// z w'_{n,ell} - n w_{n,ell} + (alpha+n) w_{n-1,ell} + 2 w_{n-1,ell-1};
// the lowering relation, independent of the raising recursion. n >= 1.
QPoly lowering_residual_jordan(const JordanChainFamily& fam, int n, int ell);

// Exact expansion of the closed-form generating function of chain ell:
//   ell = 0: (1-t)^-(alpha+1) exp(-zt/(1-t))
//   ell = 1: (sigma1 - 2 ln(1-t)) * the ell = 0 kernel
//   ell = 2: (sigma2 - 2 sigma1 ln(1-t) + 2 ln(1-t)^2) * the ell = 0 kernel
// Coefficient of t^k equals omega_{k,ell}. Rejects ell > 2.
TSeries genfunc_jordan(const JordanChainFamily& fam, int ell, int order);

// sum_{k<=order} u^k (E+)^k s / k! by iterated application of E+.
SymExpr exp_Eplus_apply(const SymExpr& s, const Q& u, int order, const Q& alpha);

// Verifies, via the differential realization, for all n <= nmax and
// ell < N:
//   T |n,ell>  = (n+(alpha+1)/2)|n,ell> + |n,ell-1>
//   E+|n,ell>  = (n+1)|n+1,ell>
//   E-|n,ell>  = -(n+alpha)|n-1,ell> - 2|n-1,ell-1>
//   K |n,ell>  = (alpha^2-1)/4 |n,ell> + alpha |n,ell-1> + |n,ell-2>
KetActionReport verify_ket_actions_jordan(const JordanChainFamily& fam, int nmax);

}  // namespace chainpoly
