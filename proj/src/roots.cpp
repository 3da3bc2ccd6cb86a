#include "chainpoly/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "chainpoly/detail/ipoly.hpp"

namespace chainpoly {

namespace {

using detail::IPoly;
using detail::ideg;
using detail::ideriv;
using detail::iprem_pos;
using detail::iprim;
using detail::isign_at;
using detail::to_int_primitive;

// Sturm chain of a squarefree primitive integer polynomial. Elements are
// scaled by positive constants only, so sign variations are those of the
// canonical chain.
std::vector<IPoly> sturm_chain(const IPoly& f) {
  std::vector<IPoly> chain;
  chain.push_back(f);
  IPoly d = iprim(ideriv(f));
  if (d.empty()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    IPoly r = iprem_pos(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(iprim(std::move(r)));
  }
  return chain;
}

int variations_at(const std::vector<IPoly>& chain, const Q& x) {
  int count = 0, prev = 0;
  for (const auto& f : chain) {
    int s = isign_at(f, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Cauchy-style bound: every real root lies strictly inside (-M, M).
Q root_bound(const IPoly& f) {
  Q m(0);
  Int lead = abs(f.back());
  for (int i = 0; i < ideg(f); ++i) {
    Q r = make_q(abs(f[i]), lead);
    if (r > m) m = r;
  }
  return m + 2;
}

struct WorkInterval {
  Q lo, hi;    // open interval with non-root endpoints, or exact point lo == hi
  int factor;  // index into the squarefree factor list
  bool exact;
};

struct FactorData {
  IPoly ipoly;
  std::vector<IPoly> chain;
  int multiplicity;
};

int count_open(const FactorData& fd, const Q& a, const Q& b) {
  return variations_at(fd.chain, a) - variations_at(fd.chain, b);
}

// Bisection with non-root endpoints. A midpoint that happens to be a root is
// emitted as an exact point and fenced off before recursing.
void isolate(const FactorData& fd, int fidx, const Q& a, const Q& b,
             std::vector<WorkInterval>& out) {
  int k = count_open(fd, a, b);
  if (k == 0) return;
  if (k == 1) {
    out.push_back({a, b, fidx, false});
    return;
  }
  Q mid = (a + b) / 2;
  if (isign_at(fd.ipoly, mid) == 0) {
    Q eps = (b - a) / 4;
    while (isign_at(fd.ipoly, mid - eps) == 0 || isign_at(fd.ipoly, mid + eps) == 0 ||
           count_open(fd, mid - eps, mid + eps) != 1)
      eps /= 2;
    out.push_back({mid, mid, fidx, true});
    isolate(fd, fidx, a, mid - eps, out);
    isolate(fd, fidx, mid + eps, b, out);
    return;
  }
  isolate(fd, fidx, a, mid, out);
  isolate(fd, fidx, mid, b, out);
}

// Once an interval holds exactly one simple root of its factor, plain sign
// bisection refines it; the full chain is no longer needed.
void refine(const FactorData& fd, WorkInterval& iv, const Q& width) {
  if (iv.exact) return;
  int slo = isign_at(fd.ipoly, iv.lo);
  while (iv.hi - iv.lo > width) {
    Q mid = (iv.lo + iv.hi) / 2;
    int sm = isign_at(fd.ipoly, mid);
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      iv.exact = true;
      return;
    }
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
}

// Touching closed intervals count as overlapping; the report promises
// strictly disjoint intervals.
bool overlaps(const WorkInterval& a, const WorkInterval& b) {
  return !(a.hi < b.lo || b.hi < a.lo);
}

void halve(const FactorData& fd, WorkInterval& iv) {
  if (iv.exact) return;
  Q mid = (iv.lo + iv.hi) / 2;
  int sm = isign_at(fd.ipoly, mid);
  if (sm == 0) {
    iv.lo = iv.hi = mid;
    iv.exact = true;
    return;
  }
  if (sm == isign_at(fd.ipoly, iv.lo))
    iv.lo = mid;
  else
    iv.hi = mid;
}

}  // namespace

RootReport isolate_real_roots(const QPoly& p, const Q& refine_width) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  if (refine_width <= 0) throw std::invalid_argument("isolate_real_roots: width must be positive");
  RootReport report;
  report.degree = p.degree();
  if (p.degree() == 0) {
    report.all_real = true;  // vacuous: no roots, degree 0
    return report;
  }

  std::vector<FactorData> factors;
  for (auto& [f, mult] : squarefree_decompose(p)) {
    FactorData fd;
    fd.ipoly = to_int_primitive(f);
    fd.chain = sturm_chain(fd.ipoly);
    fd.multiplicity = mult;
    factors.push_back(std::move(fd));
  }

  std::vector<WorkInterval> intervals;
  for (size_t i = 0; i < factors.size(); ++i) {
    Q bound = root_bound(factors[i].ipoly);
    isolate(factors[i], static_cast<int>(i), -bound, bound, intervals);
  }

  for (auto& iv : intervals) refine(factors[iv.factor], iv, refine_width);

  // All roots are distinct after the squarefree split, so repeated halving
  // separates any intervals that still touch or overlap (same-factor ones can
  // share a bisection endpoint; cross-factor ones can nest when roots are
  // close). Halving keeps each interval around its root and within width.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(intervals.begin(), intervals.end(),
              [](const WorkInterval& a, const WorkInterval& b) { return a.lo < b.lo; });
    for (size_t i = 0; i + 1 < intervals.size(); ++i) {
      if (overlaps(intervals[i], intervals[i + 1])) {
        halve(factors[intervals[i].factor], intervals[i]);
        halve(factors[intervals[i + 1].factor], intervals[i + 1]);
        changed = true;
      }
    }
  }

  std::sort(intervals.begin(), intervals.end(),
            [](const WorkInterval& a, const WorkInterval& b) { return a.lo + a.hi < b.lo + b.hi; });

  for (const auto& iv : intervals) {
    IsolatedRoot r;
    r.lo = iv.lo;
    r.hi = iv.hi;
    r.multiplicity = factors[iv.factor].multiplicity;
    Q mid = (iv.lo + iv.hi) / 2;
    r.approx = q_double(mid);
    report.roots.push_back(std::move(r));
    report.real_root_count += factors[iv.factor].multiplicity;
  }
  report.all_real = (report.real_root_count == report.degree);
  return report;
}

RootReport isolate_real_roots(const QPoly& p) {
  return isolate_real_roots(p, make_q(1, 1099511627776L));  // 2^-40
}

int sturm_count(const QPoly& p, const Q& lo, const Q& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (hi < lo) throw std::invalid_argument("sturm_count: empty interval");
  if (lo == hi) return 0;
  QPoly sf = squarefree_part(p);
  if (sf.degree() < 1) return 0;
  IPoly f = to_int_primitive(sf);
  auto chain = sturm_chain(f);
  int count = variations_at(chain, lo) - variations_at(chain, hi);
  // V counts roots in (lo, hi]; drop hi if it is a root.
  if (isign_at(f, hi) == 0) --count;
  return count;
}

}  // namespace chainpoly
