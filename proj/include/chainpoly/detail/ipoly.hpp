#pragma once

#include <utility>
#include <vector>

#include "chainpoly/qpoly.hpp"

namespace chainpoly::detail {

// Integer polynomials (dense, trailing zeros stripped). Exact gcd and Sturm
// machinery runs on primitive integer polynomials via pseudo-remainders with
// per-step content removal, which keeps coefficient growth polynomial.
using IPoly = std::vector<Int>;

inline void inorm(IPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int ideg(const IPoly& f) { return static_cast<int>(f.size()) - 1; }

inline int sgn(const Int& v) { return mpz_sgn(v.get_mpz_t()); }

inline Int icontent(const IPoly& f) {
  Int g(0);
  for (const auto& c : f) {
    Int a = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline IPoly iprim(IPoly f) {
  inorm(f);
  if (f.empty()) return f;
  Int c = icontent(f);
  if (c > 1)
    for (auto& a : f) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  return f;
}

inline IPoly ideriv(const IPoly& f) {
  if (f.size() <= 1) return {};
  IPoly d(f.size() - 1);
  for (size_t k = 1; k < f.size(); ++k) d[k - 1] = f[k] * static_cast<long>(k);
  return d;
}

inline IPoly to_int_primitive(const QPoly& p) {
  Int lcm(1);
  for (const auto& c : p.coeffs())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  IPoly f(p.coeffs().size());
  for (size_t k = 0; k < f.size(); ++k) {
    Q scaled = p.coeffs()[k] * Q(lcm);
    f[k] = scaled.get_num();
  }
  return iprim(std::move(f));
}

inline QPoly to_qpoly_monic(const IPoly& f) {
  if (f.empty()) return QPoly();
  std::vector<Q> c(f.size());
  for (size_t k = 0; k < f.size(); ++k) c[k] = make_q(f[k], f.back());
  return QPoly(std::move(c));
}

// Remainder of c*f modulo g for some positive integer c (sign-safe wherever
// only signs matter, e.g. Sturm chains).
inline IPoly iprem_pos(IPoly f, const IPoly& g) {
  inorm(f);
  const int dg = ideg(g);
  const Int& lg = g.back();
  long steps = 0;
  while (!f.empty() && ideg(f) >= dg) {
    const int shift = ideg(f) - dg;
    Int lf = f.back();
    IPoly nf(f.size() - 1);
    for (int i = 0; i < static_cast<int>(f.size()) - 1; ++i) nf[i] = lg * f[i];
    for (int j = 0; j < dg; ++j) nf[j + shift] -= lf * g[j];
    inorm(nf);
    f = std::move(nf);
    ++steps;
  }
  if (lg < 0 && steps % 2 == 1)
    for (auto& c : f) c = -c;
  return f;
}

// Primitive gcd via the primitive pseudo-remainder sequence.
inline IPoly igcd_prs(IPoly f, IPoly g) {
  f = iprim(std::move(f));
  g = iprim(std::move(g));
  if (ideg(f) < ideg(g)) std::swap(f, g);
  while (!g.empty()) {
    IPoly r = iprim(iprem_pos(f, g));
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

// Sign of f at the rational x = p/q (q > 0): sign of sum a_i p^i q^(d-i).
inline int isign_at(const IPoly& f, const Q& x) {
  if (f.empty()) return 0;
  const Int& p = x.get_num();
  const Int& q = x.get_den();
  Int acc = f.back();
  Int qpow(1);
  for (int i = ideg(f) - 1; i >= 0; --i) {
    qpow *= q;
    acc = acc * p + f[i] * qpow;
  }
  return sgn(acc);
}

}  // namespace chainpoly::detail
