#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "chainpoly/chain_diag.hpp"
#include "chainpoly/chain_jordan.hpp"
#include "chainpoly/roots.hpp"
#include "chainpoly/series.hpp"
#include "chainpoly/verify.hpp"

namespace chainpoly {

using OrderedJson = nlohmann::ordered_json;

// Coefficients serialize as exact "p" / "p/q" strings, constant term first.
OrderedJson poly_to_json(const QPoly& p);
QPoly poly_from_json(const OrderedJson& j);

// {"order": k, "coeffs": [[...], ...]} with one polynomial per power of t.
OrderedJson series_to_json(const TSeries& s);
TSeries series_from_json(const OrderedJson& j);

// Table schema, keys sorted by (n, ell):
// {"family","N","alpha","sigmas","table":{"n,ell":[coeff strings]}}
struct TableData {
  std::string family;
  int num_chains = 1;
  Q alpha;
  std::vector<Q> sigmas;
  std::map<std::pair<int, int>, QPoly> table;
};

OrderedJson table_to_json(const JordanChainFamily& fam, int nmax);
OrderedJson table_to_json(const DiagChainFamily& fam, int nmax);
TableData table_from_json(const OrderedJson& j);

OrderedJson report_to_json(const VerifyReport& report);

// CSV rows: family,n,alpha,sigma1,root_index,root_float,interval_lo,interval_hi,all_real
std::string zeros_to_csv(const std::string& family, int n, const Q& alpha, const Q& sigma1,
                         const RootReport& report);

}  // namespace chainpoly
