#include "chainpoly/qpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "chainpoly/detail/ipoly.hpp"

namespace chainpoly {

namespace {
const Q kZero(0);
}

QPoly::QPoly(const Q& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(long constant) : QPoly(Q(constant)) {}

QPoly::QPoly(std::vector<Q> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly QPoly::variable() { return monomial(1, Q(1)); }

QPoly QPoly::monomial(int power, const Q& coeff) {
  if (power < 0) throw std::invalid_argument("QPoly::monomial: negative power");
  if (coeff == 0) return QPoly();
  std::vector<Q> c(power + 1, Q(0));
  c[power] = coeff;
  return QPoly(std::move(c));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Q& QPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[power];
}

const Q& QPoly::leading() const {
  if (is_zero()) throw std::logic_error("QPoly::leading: zero polynomial");
  return coeffs_.back();
}

QPoly QPoly::derivative() const {
  if (degree() < 1) return QPoly();
  std::vector<Q> c(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * Q(static_cast<long>(k));
  return QPoly(std::move(c));
}

Q QPoly::eval(const Q& x) const {
  Q r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Q(0));
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Q(0));
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Q> out(coeffs_.size() + rhs.coeffs_.size() - 1, Q(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

QPoly& QPoly::operator*=(const Q& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string QPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Q& c = coeffs_[k];
    if (c == 0) continue;
    Q mag = c < 0 ? Q(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) {
      os << mag.get_str();
      if (k > 0) os << "*";
    }
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<QPoly, QPoly> divrem(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("divrem: zero divisor");
  QPoly rem = num;
  if (num.degree() < den.degree()) return {QPoly(), rem};
  std::vector<Q> q(num.degree() - den.degree() + 1, Q(0));
  const Q& lead = den.leading();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    Q factor = rem.leading() / lead;
    q[shift] = factor;
    rem -= QPoly::monomial(shift, factor) * den;
  }
  return {QPoly(std::move(q)), rem};
}

QPoly exact_div(const QPoly& num, const QPoly& den) {
  auto [q, r] = divrem(num, den);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return QPoly();
  detail::IPoly g = detail::igcd_prs(detail::to_int_primitive(a), detail::to_int_primitive(b));
  return detail::to_qpoly_monic(g);
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() < 1) return p;
  QPoly g = poly_gcd(p, p.derivative());
  return exact_div(p, g);
}

std::vector<std::pair<QPoly, int>> squarefree_decompose(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() < 1) return out;
  // Yun's algorithm.
  QPoly d = p.derivative();
  QPoly g = poly_gcd(p, d);
  QPoly w = exact_div(p, g);
  QPoly y = exact_div(d, g);
  int i = 1;
  while (w.degree() > 0) {
    QPoly zp = y - w.derivative();
    QPoly f = poly_gcd(w, zp);
    if (f.degree() > 0) out.emplace_back(f, i);
    w = exact_div(w, f);
    y = exact_div(zp, f);
    ++i;
  }
  return out;
}

QPoly laguerre(unsigned n, const Q& alpha) {
  std::vector<Q> c(n + 1, Q(0));
  for (unsigned k = 0; k <= n; ++k) {
    Q term = pochhammer(alpha + Q(static_cast<long>(k)) + 1, n - k);
    term /= Q(factorial(n - k) * factorial(k));
    if (k % 2 == 1) term = -term;
    c[k] = term;
  }
  return QPoly(std::move(c));
}

QPoly laguerre_ode_residual(const QPoly& p, unsigned n, const Q& alpha) {
  QPoly dp = p.derivative();
  QPoly z = QPoly::variable();
  return z * dp.derivative() + (QPoly(alpha + 1) - z) * dp + Q(static_cast<long>(n)) * p;
}

bool three_term_check(unsigned n, const Q& alpha) {
  if (n < 1) throw std::invalid_argument("three_term_check: n >= 1");
  QPoly lhs = Q(static_cast<long>(n) + 1) * laguerre(n + 1, alpha);
  QPoly rhs = (QPoly(Q(2 * static_cast<long>(n) + 1) + alpha) - QPoly::variable()) *
                  laguerre(n, alpha) -
              (alpha + Q(static_cast<long>(n))) * laguerre(n - 1, alpha);
  return lhs == rhs;
}

}  // namespace chainpoly
