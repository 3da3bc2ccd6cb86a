#include "chainpoly/rational.hpp"

#include <stdexcept>

namespace chainpoly {

Q make_q(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_q: zero denominator");
  Q q(num, den);
  q.canonicalize();
  return q;
}

Q make_q(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_q: zero denominator");
  Q q(num, den);
  q.canonicalize();
  return q;
}

Q parse_q(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("parse_q: empty string");
  std::string str(s);
  auto slash = str.find('/');
  try {
    if (slash == std::string::npos) {
      Int num(str);
      return Q(num);
    }
    Int num(str.substr(0, slash));
    Int den(str.substr(slash + 1));
    return make_q(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_q: malformed rational '" + str + "'");
  }
}

std::string q_str(const Q& q) { return q.get_str(); }

double q_double(const Q& q) { return q.get_d(); }

bool q_is_integer(const Q& q) { return q.get_den() == 1; }

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Q pochhammer(const Q& a, unsigned k) {
  Q r(1);
  Q term = a;
  for (unsigned j = 0; j < k; ++j) {
    r *= term;
    term += 1;
  }
  return r;
}

Q harmonic(unsigned m) {
  Q r(0);
  for (unsigned j = 1; j <= m; ++j) r += make_q(1, j);
  return r;
}

Q moment(unsigned k, const Q& alpha) {
  if (alpha <= -1) throw std::domain_error("moment: requires alpha > -1");
  return pochhammer(alpha + 1, k);
}

}  // namespace chainpoly
