#pragma once

#include <vector>

#include "chainpoly/qpoly.hpp"

namespace chainpoly {

struct IsolatedRoot {
  Q lo;              // lo == hi marks an exact rational root
  Q hi;
  int multiplicity;  // multiplicity in the input polynomial
  double approx;     // interval midpoint as binary64
};

struct RootReport {
  int degree = -1;
  int real_root_count = 0;          // counted with multiplicity
  std::vector<IsolatedRoot> roots;  // distinct roots, ascending
  bool all_real = false;            // real_root_count == degree
};

// Certified real-root isolation: squarefree decomposition, then exact
// Sturm-sequence counting over Q with bisection down to pairwise-disjoint
// intervals of width <= refine_width. Rejects the zero polynomial.
RootReport isolate_real_roots(const QPoly& p, const Q& refine_width);

// Default refine_width = 2^-40.
RootReport isolate_real_roots(const QPoly& p);

// Number of distinct real roots of p in (lo, hi), endpoints excluded;
// requires lo <= hi and p nonzero. Counting is additive over abutting
// intervals whose shared endpoint is not a root.
int sturm_count(const QPoly& p, const Q& lo, const Q& hi);

}  // namespace chainpoly
