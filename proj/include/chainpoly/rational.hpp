#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chainpoly {

// Exact scalars. Q is always kept canonical: lowest terms, denominator > 0,
// so equality is structural. All parameters (alpha, the sigma seeds, lambda
// instances) and every coefficient in the library live here.
using Int = mpz_class;
using Q = mpq_class;

Q make_q(long num, long den = 1);
Q make_q(const Int& num, const Int& den);

// Accepts "p" or "p/q" with optional sign; rejects zero denominators.
Q parse_q(std::string_view s);

// Lossless form: "p" or "p/q".
std::string q_str(const Q& q);

double q_double(const Q& q);

bool q_is_integer(const Q& q);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// Rising factorial a(a+1)...(a+k-1); empty product 1 for k = 0.
Q pochhammer(const Q& a, unsigned k);

// H_m = 1 + 1/2 + ... + 1/m, with H_0 = 0.
Q harmonic(unsigned m);

// Integral of z^{k+alpha} e^{-z} over (0,inf) in units of Gamma(alpha+1),
// i.e. (alpha+1)_k. Requires alpha > -1 for convergence.
Q moment(unsigned k, const Q& alpha);

}  // namespace chainpoly
