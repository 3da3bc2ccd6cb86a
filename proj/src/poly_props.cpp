#include "chainpoly/poly_props.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace chainpoly {

namespace {

// One linear equation a*delta0 + b*delta1 + c = 0.
struct LinEq {
  Q a, b, c;
};

// Exact solve of an overdetermined 2-unknown system; every equation is
// verified against the solution.
bool solve_two_param(const std::vector<LinEq>& eqs, Q& delta0, Q& delta1) {
  delta0 = 0;
  delta1 = 0;
  size_t pi = eqs.size(), pj = eqs.size();
  Q det(0);
  for (size_t i = 0; i < eqs.size() && pi == eqs.size(); ++i) {
    for (size_t j = i + 1; j < eqs.size(); ++j) {
      det = eqs[i].a * eqs[j].b - eqs[j].a * eqs[i].b;
      if (det != 0) {
        pi = i;
        pj = j;
        break;
      }
    }
  }
  if (pi == eqs.size()) {
    // Rank < 2: try a single pivot, leaving the other unknown at zero.
    for (const auto& e : eqs) {
      if (e.a != 0) {
        delta0 = -e.c / e.a;
        break;
      }
      if (e.b != 0) {
        delta1 = -e.c / e.b;
        break;
      }
    }
  } else {
    delta0 = (-eqs[pi].c * eqs[pj].b + eqs[pj].c * eqs[pi].b) / det;
    delta1 = (-eqs[pi].a * eqs[pj].c + eqs[pj].a * eqs[pi].c) / det;
  }
  for (const auto& e : eqs)
    if (e.a * delta0 + e.b * delta1 + e.c != 0) return false;
  return true;
}

void append_poly_eqs(std::vector<LinEq>& eqs, const QPoly& ref, const QPoly& mul0,
                     const QPoly& mul1) {
  int top = std::max({ref.degree(), mul0.degree(), mul1.degree()});
  for (int k = 0; k <= top; ++k) eqs.push_back({mul0.coeff(k), mul1.coeff(k), ref.coeff(k)});
}

QPoly fourth_order_apply(const QPoly& w, int n, const Q& a, const QPoly& c2) {
  QPoly z = QPoly::variable();
  QPoly w1 = w.derivative();
  QPoly w2 = w1.derivative();
  QPoly w3 = w2.derivative();
  QPoly w4 = w3.derivative();
  QPoly out = z * z * w4;
  out += (Q(2 * a + 5) * z - Q(2) * z * z) * w3;
  out += c2 * w2;
  out += (QPoly(Q(n - 1) * (2 * a + 3)) - Q(2 * n - 2) * z) * w1;
  out += Q(n * (n - 1)) * w;
  return out;
}

QPoly third_order_apply(const QPoly& w, int n, const Q& a, const Q& s1, const Q& c21,
                        const Q& c10) {
  QPoly z = QPoly::variable();
  QPoly w1 = w.derivative();
  QPoly w2 = w1.derivative();
  QPoly w3 = w2.derivative();
  Q lead = s1 + a * s1 - 1;
  QPoly out = lead * z * w3;
  out += (QPoly(Q(a + 3) * lead) + c21 * z) * w2;
  out += (QPoly(c10 + Q(2 * n - 2) * s1 * (a + 1)) - Q(n) * s1 * z) * w1;
  out += Q(n) * Q(n) * s1 * w;
  return out;
}

Q weighted_inner(const QPoly& p, const Q& alpha) {
  Q acc(0);
  for (int k = 0; k <= p.degree(); ++k) acc += p.coeff(k) * moment(k, alpha);
  return acc;
}

RootReport zeros_of(const QPoly& w, const Q& refine_width) {
  if (w.degree() < 1)
    throw std::invalid_argument("zeros_report: chain polynomial is constant");
  return isolate_real_roots(w, refine_width);
}

}  // namespace

QPoly recurdiff_residual(const JordanChainFamily& fam, int n) {
  return fam.omega(n, 1) - fam.omega(n, 1).derivative() + fam.omega(n + 1, 1).derivative();
}

QPoly recurdiff_summed_residual(const JordanChainFamily& fam, int k) {
  QPoly acc = fam.omega(k + 1, 1).derivative();
  for (int i = 0; i <= k; ++i) acc += fam.omega(i, 1);
  return acc;
}

QPoly mixed_recurrence_residual_jordan(const JordanChainFamily& fam, int n) {
  if (n < 1) throw std::invalid_argument("mixed_recurrence_residual_jordan: n >= 1");
  const Q& a = fam.alpha();
  QPoly z = QPoly::variable();
  QPoly lhs = -Q(a + Q(n)) * fam.omega(n - 1, 1) + Q(n) * fam.omega(n, 1) +
              (QPoly(Q(n + 1) + a) - z) * fam.omega(n, 1) - Q(n + 1) * fam.omega(n + 1, 1);
  QPoly rhs = Q(2) * laguerre(n - 1, a) - Q(2) * laguerre(n, a);
  return lhs - rhs;
}

QPoly fourth_order_residual(const JordanChainFamily& fam, int n) {
  const Q& a = fam.alpha();
  QPoly z = QPoly::variable();
  QPoly c2 = Q(2 * n - 5 - 2 * a) * z + z * z;
  return fourth_order_apply(fam.omega(n, 1), n, a, c2);
}

QPoly fourth_order_corrected_residual(const JordanChainFamily& fam, int n) {
  const Q& a = fam.alpha();
  QPoly z = QPoly::variable();
  QPoly c2 = Q(2 * n - 7 - 2 * a) * z + z * z + QPoly(Q((a + 2) * (a + 2)));
  return fourth_order_apply(fam.omega(n, 1), n, a, c2);
}

QPoly third_order_residual(const DiagChainFamily& fam, int n) {
  const Q& a = fam.alpha();
  Q s1 = fam.sigma(1);
  Q c21 = Q(1) - s1 * (a - Q(n + 1));
  Q c10 = Q(-(n - 1));
  return third_order_apply(fam.omega(n, 1), n, a, s1, c21, c10);
}

QPoly third_order_corrected_residual(const DiagChainFamily& fam, int n) {
  const Q& a = fam.alpha();
  Q s1 = fam.sigma(1);
  Q c21 = Q(1) - s1 * (a - Q(n - 1));
  Q c10 = Q(-(n - 2));
  return third_order_apply(fam.omega(n, 1), n, a, s1, c21, c10);
}

OdeCorrectionFit fit_fourth_order_correction(const JordanChainFamily& fam, int nmin_fit,
                                             int nmax_fit) {
  OdeCorrectionFit fit;
  std::vector<LinEq> eqs;
  bool any_nonzero = false;
  for (int n = nmin_fit; n <= nmax_fit; ++n) {
    QPoly ref = fourth_order_residual(fam, n);
    if (!ref.is_zero()) any_nonzero = true;
    QPoly w2 = fam.omega(n, 1).derivative().derivative();
    append_poly_eqs(eqs, ref, w2, QPoly::variable() * w2);
  }
  fit.reference_exact = !any_nonzero;
  fit.solved = solve_two_param(eqs, fit.delta0, fit.delta1);
  std::ostringstream os;
  os << "w'' coefficient correction: +(" << q_str(fit.delta0) << ") + (" << q_str(fit.delta1)
     << ") z";
  fit.detail = os.str();
  return fit;
}

OdeCorrectionFit fit_third_order_correction(const DiagChainFamily& fam, int nmin_fit,
                                            int nmax_fit) {
  OdeCorrectionFit fit;
  std::vector<LinEq> eqs;
  bool any_nonzero = false;
  for (int n = nmin_fit; n <= nmax_fit; ++n) {
    QPoly ref = third_order_residual(fam, n);
    if (!ref.is_zero()) any_nonzero = true;
    QPoly w1 = fam.omega(n, 1).derivative();
    QPoly w2 = w1.derivative();
    append_poly_eqs(eqs, ref, w1, QPoly::variable() * w2);
  }
  fit.reference_exact = !any_nonzero;
  fit.solved = solve_two_param(eqs, fit.delta0, fit.delta1);
  std::ostringstream os;
  os << "w' constant correction: +(" << q_str(fit.delta0) << "); w'' z-coefficient correction: +("
     << q_str(fit.delta1) << ") z";
  fit.detail = os.str();
  return fit;
}

QPoly partner_q_jordan(int m, const Q& alpha) {
  if (m < 0) throw std::invalid_argument("partner_q_jordan: m >= 0");
  std::vector<Q> c(m + 1, Q(0));
  for (int k = 0; k <= m; ++k) {
    Q den = pochhammer(alpha + 1, k);
    if (den == 0) {
      std::ostringstream os;
      os << "partner_q_jordan: (1+alpha)_k vanishes at k = " << k;
      throw std::invalid_argument(os.str());
    }
    Q term = Q(binomial(m, k)) / den;
    if (k % 2 == 1) term = -term;
    c[k] = term;
  }
  return QPoly(std::move(c));
}

QPoly partner_q_diag(int m, const Q& alpha, const Q& sigma1) {
  if (m < 0) throw std::invalid_argument("partner_q_diag: m >= 0");
  Q top = sigma1 + alpha * sigma1 - 1;
  std::vector<Q> c(m + 1, Q(0));
  for (int k = 0; k <= m; ++k) {
    Q den = pochhammer(alpha + 1, k) * (Q(k + 1) * sigma1 + alpha * sigma1 - 1);
    if (den == 0) {
      std::ostringstream os;
      os << "partner_q_diag: denominator vanishes at k = " << k;
      throw std::invalid_argument(os.str());
    }
    Q term = Q(binomial(m, k)) * top / den;
    if (k % 2 == 1) term = -term;
    c[k] = term;
  }
  return QPoly(std::move(c));
}

InnerProductResult biorth_inner(const JordanChainFamily& fam, int n, int m) {
  QPoly prod = partner_q_jordan(m, fam.alpha()) * fam.omega(n, 1);
  return {weighted_inner(prod, fam.alpha()), n, m, "jordan"};
}

InnerProductResult biorth_inner(const DiagChainFamily& fam, int n, int m) {
  if (n < 1) throw std::invalid_argument("biorth_inner (diag): n >= 1");
  QPoly prod = partner_q_diag(m, fam.alpha(), fam.sigma(1)) * fam.omega(n, 1);
  return {weighted_inner(prod, fam.alpha()), n, m, "diag"};
}

RootReport zeros_report(const JordanChainFamily& fam, int n, const Q& refine_width) {
  if (n < 1) throw std::invalid_argument("zeros_report: n >= 1");
  return zeros_of(fam.omega(n, 1), refine_width);
}

RootReport zeros_report(const DiagChainFamily& fam, int n, const Q& refine_width) {
  if (n < 1) throw std::invalid_argument("zeros_report: n >= 1");
  return zeros_of(fam.omega(n, 1), refine_width);
}

}  // namespace chainpoly
