#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chainpoly/chain_diag.hpp"
#include "chainpoly/chain_jordan.hpp"
#include "chainpoly/qpoly.hpp"

namespace chainpoly {

enum class BorelCase { nondiagonalizable, diagonalizable };

// Module generated from an n-dimensional indecomposable Borel representation:
// chains indexed i = 1..n, depths a = 0..depth_cap built by powers of f.
struct ModuleSpec {
  BorelCase kase;
  int chains;     // n
  int depth_cap;  // A
};

enum class Gen { e, f, h };

// Finite combination of lattice basis vectors v(i, a) with exact polynomial
// coefficients in the weight parameter lambda (kept symbolic).
struct LatticeVector {
  std::map<std::pair<int, int>, QPoly> terms;  // (i, a) -> coefficient

  static LatticeVector basis(int i, int a);
  bool is_zero() const { return terms.empty(); }
  void add(int i, int a, const QPoly& c);
  LatticeVector& operator+=(const LatticeVector& rhs);
  LatticeVector& operator-=(const LatticeVector& rhs);
  LatticeVector& operator*=(const QPoly& s);
  friend LatticeVector operator+(LatticeVector x, const LatticeVector& y) { return x += y; }
  friend LatticeVector operator-(LatticeVector x, const LatticeVector& y) { return x -= y; }
  friend LatticeVector operator*(const QPoly& s, LatticeVector x) { return x *= s; }
  bool operator==(const LatticeVector& rhs) const { return terms == rhs.terms; }
  std::string str() const;
};

// Exact action of a generator; lambda stays symbolic.
//
// Nondiagonalizable case (v(n+1) = 0):
//   h v(i,a) = (lambda-2a) v(i,a) + v(i+1,a)
//   f v(i,a) = v(i,a+1)
//   e v(i,a) = a(lambda-a+1) v(i,a-1) + a v(i+1,a-1)
// Diagonalizable case:
//   h v(i,a) = (lambda+2(i-1)-2a) v(i,a)
//   f v(i,a) = v(i,a+1)
//   e v(i,a) = a(lambda+2i-a-1) v(i,a-1) + v(i+1,a)   (no second term at i=n)
//
// f beyond depth_cap is an error, not a truncation.
LatticeVector act(Gen g, const LatticeVector& v, const ModuleSpec& spec);

struct ModuleCheckFailure {
  int i;
  int a;
  std::string identity;
  std::string residual;
};

struct ModuleReport {
  std::vector<ModuleCheckFailure> failures;
  int checks_run = 0;
  bool all_pass() const { return failures.empty(); }
};

// [e,f] = h, [h,e] = 2e, [h,f] = -2f on every basis vector with a < depth_cap,
// lambda symbolic.
ModuleReport commutator_check(const ModuleSpec& spec);

// [h,e^a] = 2a e^a, [h,f^a] = -2a f^a, [e,f^a] = a(h+a-1)f^(a-1) and
// [f,e^a] = -a e^(a-1)(h+a-1) (the weight factor acts first) for 1 <= a <= amax.
ModuleReport power_commutator_check(const ModuleSpec& spec, int amax);

// Rank of the f action on the basis vectors with a < depth_cap, computed by
// fraction-free elimination over Q[lambda]; full rank means f is injective on
// the truncated lattice.
int f_rank(const ModuleSpec& spec);

struct BridgeReport {
  bool solved = false;
  std::string obstruction;             // why no intertwiner exists, when !solved
  Q lambda_value;                      // the lambda <-> alpha dictionary instance
  std::string dictionary;
  std::vector<std::string> notes;
  std::map<std::pair<int, int>, Q> rescaling;  // (n, ell) -> rho
};

// Solves for the per-state rescaling rho(n,ell) that intertwines the chain
// family actions with the lattice actions through e = -E-, f = -E+, h = -2T
// and a lambda value derived from the base weights. The literal h = +2T
// dictionary is tried first and its obstruction recorded.
BridgeReport realization_bridge(const ModuleSpec& spec, const JordanChainFamily& fam,
                                int nmax);
BridgeReport realization_bridge(const ModuleSpec& spec, const DiagChainFamily& fam,
                                int nmax);

}  // namespace chainpoly
