#include "chainpoly/symstate.hpp"

#include <sstream>
#include <stdexcept>

namespace chainpoly {

SymExpr SymExpr::term(const LogMonomial& m, const Q& coeff) {
  SymExpr e;
  e.add_term(m, coeff);
  return e;
}

SymExpr SymExpr::from_poly(const QPoly& p, int tpow, int logpow) {
  SymExpr e;
  for (int k = 0; k <= p.degree(); ++k)
    e.add_term({k, tpow, logpow}, p.coeff(k));
  return e;
}

bool SymExpr::has_negative_powers() const {
  for (const auto& [m, c] : terms_)
    if (m.zpow < 0 || m.tpow < 0) return true;
  return false;
}

QPoly SymExpr::poly_coeff(int tpow, int logpow) const {
  std::vector<Q> coeffs;
  for (const auto& [m, c] : terms_) {
    if (m.tpow != tpow || m.logpow != logpow) continue;
    if (m.zpow < 0) throw std::logic_error("SymExpr::poly_coeff: negative z power");
    if (static_cast<size_t>(m.zpow) >= coeffs.size()) coeffs.resize(m.zpow + 1, Q(0));
    coeffs[m.zpow] = c;
  }
  return QPoly(std::move(coeffs));
}

SymExpr& SymExpr::add_term(const LogMonomial& m, const Q& coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

SymExpr SymExpr::operator-() const {
  SymExpr r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SymExpr& SymExpr::operator+=(const SymExpr& rhs) {
  if (this == &rhs) {
    for (auto& [m, c] : terms_) c *= 2;
    return *this;
  }
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& rhs) {
  if (this == &rhs) {
    terms_.clear();
    return *this;
  }
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

SymExpr& SymExpr::operator*=(const Q& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

std::string SymExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << q_str(c);
    if (m.zpow != 0) os << "*z^" << m.zpow;
    if (m.tpow != 0) os << "*t^" << m.tpow;
    if (m.logpow != 0) os << "*L^" << m.logpow;
  }
  return os.str();
}

SymExpr euler_z(const SymExpr& s) {
  SymExpr r;
  for (const auto& [m, c] : s.terms()) {
    r.add_term(m, c * Q(m.zpow));
    if (m.logpow > 0) r.add_term({m.zpow, m.tpow, m.logpow - 1}, c * Q(m.logpow));
  }
  return r;
}

SymExpr euler_t(const SymExpr& s) {
  SymExpr r;
  for (const auto& [m, c] : s.terms()) {
    r.add_term(m, c * Q(m.tpow));
    if (m.logpow > 0) r.add_term({m.zpow, m.tpow, m.logpow - 1}, c * Q(m.logpow));
  }
  return r;
}

SymExpr mul_z(const SymExpr& s) {
  SymExpr r;
  for (const auto& [m, c] : s.terms()) r.add_term({m.zpow + 1, m.tpow, m.logpow}, c);
  return r;
}

SymExpr mul_t(const SymExpr& s) {
  SymExpr r;
  for (const auto& [m, c] : s.terms()) r.add_term({m.zpow, m.tpow + 1, m.logpow}, c);
  return r;
}

SymExpr div_t(const SymExpr& s) {
  SymExpr r;
  for (const auto& [m, c] : s.terms()) r.add_term({m.zpow, m.tpow - 1, m.logpow}, c);
  return r;
}

SymExpr apply(OpName op, const SymExpr& s, const Q& alpha) {
  switch (op) {
    case OpName::T:
      return euler_t(s) + Q((alpha + 1) / 2) * s;
    case OpName::Eplus: {
      SymExpr inner = euler_z(s) + euler_t(s) + Q(alpha + 1) * s - mul_z(s);
      return mul_t(inner);
    }
    case OpName::Eminus:
      return div_t(euler_z(s) - euler_t(s));
    case OpName::Casimir: {
      SymExpr t1 = apply(OpName::T, s, alpha);
      return apply(OpName::T, t1, alpha) + t1 +
             apply(OpName::Eminus, apply(OpName::Eplus, s, alpha), alpha);
    }
  }
  throw std::logic_error("apply: unknown operator");
}

SymExpr commutator_residual(OpName a, OpName b, const SymExpr& probe, const Q& alpha) {
  if (a == OpName::Casimir || b == OpName::Casimir)
    throw std::invalid_argument("commutator_residual: expects T, Eplus or Eminus");
  // Canonical order T < E+ < E-; the bracket table is antisymmetric.
  auto rank = [](OpName o) { return o == OpName::T ? 0 : o == OpName::Eplus ? 1 : 2; };
  OpName x = a, y = b;
  bool flipped = false;
  if (rank(x) > rank(y)) {
    std::swap(x, y);
    flipped = true;
  }
  SymExpr rhs;
  if (x != y) {
    if (x == OpName::T && y == OpName::Eplus)
      rhs = apply(OpName::Eplus, probe, alpha);  // [T,E+] = E+
    else if (x == OpName::T && y == OpName::Eminus)
      rhs = -apply(OpName::Eminus, probe, alpha);  // [T,E-] = -E-
    else
      rhs = Q(2) * apply(OpName::T, probe, alpha);  // [E+,E-] = 2T
    if (flipped) rhs = -rhs;
  }
  SymExpr lhs =
      apply(a, apply(b, probe, alpha), alpha) - apply(b, apply(a, probe, alpha), alpha);
  return lhs - rhs;
}

}  // namespace chainpoly
