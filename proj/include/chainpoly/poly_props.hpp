#pragma once

#include <optional>
#include <string>

#include "chainpoly/chain_diag.hpp"
#include "chainpoly/chain_jordan.hpp"
#include "chainpoly/roots.hpp"

namespace chainpoly {

// w_{n,1} - w'_{n,1} + w'_{n+1,1}; identically zero on the Jordan family.
QPoly recurdiff_residual(const JordanChainFamily& fam, int n);

// w'_{k+1,1} + sum_{i=0}^{k} w_{i,1}; the telescoped form of the above.
QPoly recurdiff_summed_residual(const JordanChainFamily& fam, int k);

// -(alpha+n) w_{n-1,1} + n w_{n,1} + (1+alpha+n-z) w_{n,1} - (n+1) w_{n+1,1}
//   - (2 L_{n-1} - 2 L_n); zero on the Jordan family. n >= 1.
QPoly mixed_recurrence_residual_jordan(const JordanChainFamily& fam, int n);

// Fourth-order operator applied to the Jordan w_{n,1} with the reference
// second-derivative coefficient (2n-5-2alpha)z + z^2. This coefficient set
// does not annihilate the chain; it is kept as the baseline the correction
// fit is measured against.
QPoly fourth_order_residual(const JordanChainFamily& fam, int n);

// Same operator with the corrected second-derivative coefficient
// (2n-7-2alpha)z + z^2 + (2+alpha)^2, i.e. the composition of the index-n
// Laguerre operator with its first-derivative companion. Identically zero.
QPoly fourth_order_corrected_residual(const JordanChainFamily& fam, int n);

// Third-order operator applied to the diagonal w_{n,1} with the reference
// coefficients; nonzero on the family (see the corrected variant).
QPoly third_order_residual(const DiagChainFamily& fam, int n);

// Corrected coefficients: the z-part of the second-derivative coefficient is
// (1 - sigma1(alpha-n+1)) z and the constant part of the first-derivative
// coefficient is -(n-2) + (2n-2) sigma1 (1+alpha). Identically zero.
QPoly third_order_corrected_residual(const DiagChainFamily& fam, int n);

// Undetermined-coefficients protocol: solve exactly for the two correction
// parameters (delta0 + delta1 z, added to the reference operator's target
// coefficient) that annihilate w_{n,1} for every n in [nmin_fit, nmax_fit].
struct OdeCorrectionFit {
  bool reference_exact = false;  // the uncorrected operator already vanishes
  bool solved = false;           // a consistent correction exists
  Q delta0;                      // constant added to the target coefficient
  Q delta1;                      // z-coefficient added to the target coefficient
  std::string detail;
};

// Target: the w'' coefficient of the fourth-order operator. Expected result:
// delta1 = -2, delta0 = (2+alpha)^2.
OdeCorrectionFit fit_fourth_order_correction(const JordanChainFamily& fam, int nmin_fit,
                                             int nmax_fit);

// Targets: delta1 on the z-part of the w'' coefficient and delta0 on the
// constant part of the w' coefficient. Expected: delta1 = -2 sigma1,
// delta0 = 1.
OdeCorrectionFit fit_third_order_correction(const DiagChainFamily& fam, int nmin_fit,
                                            int nmax_fit);

// q_m(z) = sum_{k<=m} binom(m,k) (-1)^k z^k / (1+alpha)_k; equals
// m!/(1+alpha)_m L_m.
QPoly partner_q_jordan(int m, const Q& alpha);

// q_m(z) = sum_{k<=m} binom(m,k) (-1)^k z^k (-1+sigma1+alpha sigma1)
//          / ((1+alpha)_k (-1+(k+1) sigma1 + alpha sigma1)).
// Rejects parameters that zero a denominator, naming the offending k.
QPoly partner_q_diag(int m, const Q& alpha, const Q& sigma1);

struct InnerProductResult {
  Q value;  // in units of Gamma(alpha+1)
  int n;
  int m;
  std::string family;
};

// integral of q_m(z) w_{n,1}(z) z^alpha e^-z over (0,inf), in units of
// Gamma(alpha+1), contracted exactly through moments. Vanishes for n < m
// (Jordan) and for n <= m (diagonal).
InnerProductResult biorth_inner(const JordanChainFamily& fam, int n, int m);
InnerProductResult biorth_inner(const DiagChainFamily& fam, int n, int m);

// Certified real-root report of w_{n,1}. n >= 1; constant w rejected.
RootReport zeros_report(const JordanChainFamily& fam, int n, const Q& refine_width);
RootReport zeros_report(const DiagChainFamily& fam, int n, const Q& refine_width);

}  // namespace chainpoly
