#pragma once

#include <map>
#include <string>
#include <vector>

#include "chainpoly/chain_jordan.hpp"  // KetActionReport
#include "chainpoly/qpoly.hpp"
#include "chainpoly/series.hpp"
#include "chainpoly/symstate.hpp"

namespace chainpoly {

// Casimir data derived compositionally for one chain of the diagonal family:
// K|n,ell> = scalar * |n,ell> + (n+1-ell) * |n,ell-1>.
struct DiagCasimirChain {
  int ell;
  Q scalar;                 // (2 ell + alpha + 1)(2 ell + alpha - 1)/4 once derived
  bool north_coeff_ok;      // the |n,ell-1> coefficient equals n+1-ell
  bool matches_shifted_quarter;  // scalar == (2 ell + alpha + 1)(2 ell + alpha - 1)/4
  bool matches_half_scale;       // scalar == (alpha + 2 ell + 1)(alpha + 2 ell + 3)/2
};

// The family with a diagonal Cartan action: states |n,ell> = omega_{n,ell} t^n
// on a trapezoid lattice (chain ell starts at n = ell). Chain ell is seeded by
// solving E-|ell,ell> = |ell-1,ell-1>, i.e. z w' - ell w = omega_{ell-1,ell-1},
// whose degree-ell polynomial solution has free z^ell coefficient sigma_ell;
// the rest of the chain follows from the raising recursion
//
//   (n+1-ell) omega_{n+1,ell} = z omega'_{n,ell} + (n+alpha+1-z) omega_{n,ell}.
class DiagChainFamily {
 public:
  DiagChainFamily(int num_chains, Q alpha, std::vector<Q> sigmas);

  int num_chains() const { return num_chains_; }
  const Q& alpha() const { return alpha_; }
  Q sigma(int ell) const;

  // Memoized omega_{n,ell}; direct access requires n >= ell (trapezoid).
  const QPoly& omega(int n, int ell) const;
  // Fills the table through n <= nmax; after this, omega() on the filled
  // range is a pure read and safe to share across threads.
  void warm(int nmax) const;
  // Zero outside the trapezoid; for summing contexts.
  QPoly omega_or_zero(int n, int ell) const;

  SymExpr state(int n, int ell) const;  // omega_{n,ell}(z) t^n

 private:
  int num_chains_;
  Q alpha_;
  std::vector<Q> sigmas_;
  mutable std::map<std::pair<int, int>, QPoly> table_;
};

// sigma1 ((alpha+1) sum_{k<n} L_k - n L_n) - sum_{k<n} L_k. n >= 1.
QPoly closed_form_diag_omega1(int n, const Q& alpha, const Q& sigma1);

// n(n-1) sigma2 L_n + (n-1)(sigma1 - 2 sigma2 (2+alpha)) L_{n-1}
//   + sum_{k=0}^{n-2} [ (n-k-1)/2 - sigma1((n-k-1)alpha + (n-1-2k))
//                       + sigma2 (2+alpha)((n-k-1)alpha + (n-1-3k)) ] L_k.
// n >= 2.
QPoly closed_form_diag_omega2(int n, const Q& alpha, const Q& sigma1, const Q& sigma2);

// z^2 w''_{n,ell} + z(1+alpha-z) w'_{n,ell} + (nz - alpha ell - ell^2) w_{n,ell}
//   - (n+1-ell) w_{n,ell-1},
// the second-order identity obtained by composing the verified raising and
// lowering actions (the ell-1 neighbour is the chain nearer the Laguerre one).
// Identically zero on the family. ell >= 1, n >= ell.
QPoly ode_residual_diag(const DiagChainFamily& fam, int n, int ell);

// z w'_{n,ell} - n w_{n,ell} + (alpha+n+ell) w_{n-1,ell} - w_{n-1,ell-1}.
QPoly lowering_residual_diag(const DiagChainFamily& fam, int n, int ell);

// (2n+alpha+1-z) w_{n,ell} - (n+1-ell) w_{n+1,ell} - (alpha+n+ell) w_{n-1,ell}
//   + w_{n-1,ell-1}: the three-term relation in n.
QPoly z_recurrence_residual_diag(const DiagChainFamily& fam, int n, int ell);

// Exact expansion of the generating functions:
//   ell = 0: (1-t)^-(alpha+1) exp(-zt/(1-t))
//   ell = 1: (sigma1 z - 1 + t) t (1-t)^-(alpha+3) exp(-zt/(1-t))
//   ell = 2: (sigma2 z^2 - sigma1 z (1-t) + (1-t)^2/2) t^2 (1-t)^-(alpha+5)
//            exp(-zt/(1-t))
// Coefficient of t^n equals omega_{n,ell} for n >= ell and 0 below.
TSeries genfunc_diag(const DiagChainFamily& fam, int ell, int order);

// T |n,ell> = (n+(alpha+1)/2)|n,ell>;  E+|n,ell> = (n+1-ell)|n+1,ell>;
// E-|n,ell> = -(alpha+n+ell)|n-1,ell> + |n-1,ell-1>  (terms with n-1 below
// the trapezoid drop). Verified through the differential realization.
KetActionReport verify_ket_actions_diag(const DiagChainFamily& fam, int nmax);

// Derives the Casimir action K|n,ell> = c|n,ell> + d|n,ell-1> per chain by an
// exact linear solve against the family table and reports which closed form
// the scalars match. The seed sigma_1 = 1/(1+alpha) collapses chain 1 onto a
// multiple of the Laguerre chain; the decomposition is then basis-ambiguous
// and the scan reports the collapsed scalar instead.
std::vector<DiagCasimirChain> casimir_scan_diag(const DiagChainFamily& fam, int nmax);

}  // namespace chainpoly
