#pragma once

#include <string>
#include <vector>

#include "chainpoly/rational.hpp"

namespace chainpoly {

// One verified identity. The identity field carries the checked relation in
// plain ASCII so a failing line can be located in the derivations directly.
struct CheckItem {
  std::string suite;
  std::string identity;
  std::string params;
  bool pass = false;
  std::string detail;  // residual when failing; informational notes otherwise
};

struct VerifyReport {
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  void add(std::string suite, std::string identity, std::string params, bool pass,
           std::string detail = "") {
    items.push_back({std::move(suite), std::move(identity), std::move(params), pass,
                     std::move(detail)});
  }
};

struct VerifyConfig {
  std::string family = "both";  // jordan | diag | both
  int num_chains = 3;
  Q alpha = make_q(1, 2);
  std::vector<Q> sigmas;  // missing entries default to 0
  int nmax = 12;
  int order = 12;
  Q refine_width = make_q(1, 1099511627776L);  // 2^-40
};

// Suites: sl2, ket, ode, recur, genfunc, casimir, biorth, module, all.
VerifyReport run_suite(const std::string& suite, const VerifyConfig& cfg);

std::vector<std::string> suite_names();

}  // namespace chainpoly
