#include "chainpoly/json_io.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace chainpoly {

OrderedJson poly_to_json(const QPoly& p) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& c : p.coeffs()) arr.push_back(q_str(c));
  return arr;
}

QPoly poly_from_json(const OrderedJson& j) {
  std::vector<Q> coeffs;
  for (const auto& s : j) coeffs.push_back(parse_q(s.get<std::string>()));
  return QPoly(std::move(coeffs));
}

OrderedJson series_to_json(const TSeries& s) {
  OrderedJson j;
  j["order"] = s.order();
  OrderedJson coeffs = OrderedJson::array();
  for (int k = 0; k <= s.order(); ++k) coeffs.push_back(poly_to_json(s.coeff(k)));
  j["coeffs"] = coeffs;
  return j;
}

TSeries series_from_json(const OrderedJson& j) {
  int order = j.at("order").get<int>();
  TSeries s(order);
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != order + 1)
    throw std::invalid_argument("series_from_json: coefficient count mismatch");
  for (int k = 0; k <= order; ++k) s.set_coeff(k, poly_from_json(coeffs[k]));
  return s;
}

namespace {

template <typename Family>
OrderedJson table_to_json_impl(const Family& fam, int nmax, const std::string& name,
                               bool trapezoid) {
  OrderedJson j;
  j["family"] = name;
  j["N"] = fam.num_chains();
  j["alpha"] = q_str(fam.alpha());
  OrderedJson sig = OrderedJson::array();
  for (int ell = 1; ell < fam.num_chains(); ++ell) sig.push_back(q_str(fam.sigma(ell)));
  j["sigmas"] = sig;
  OrderedJson table = OrderedJson::object();
  for (int n = 0; n <= nmax; ++n)
    for (int ell = 0; ell < fam.num_chains(); ++ell) {
      if (trapezoid && n < ell) continue;
      std::ostringstream key;
      key << n << "," << ell;
      table[key.str()] = poly_to_json(fam.omega(n, ell));
    }
  j["table"] = table;
  return j;
}

}  // namespace

OrderedJson table_to_json(const JordanChainFamily& fam, int nmax) {
  return table_to_json_impl(fam, nmax, "jordan", false);
}

OrderedJson table_to_json(const DiagChainFamily& fam, int nmax) {
  return table_to_json_impl(fam, nmax, "diag", true);
}

TableData table_from_json(const OrderedJson& j) {
  TableData data;
  data.family = j.at("family").get<std::string>();
  data.num_chains = j.at("N").get<int>();
  data.alpha = parse_q(j.at("alpha").get<std::string>());
  for (const auto& s : j.at("sigmas")) data.sigmas.push_back(parse_q(s.get<std::string>()));
  for (const auto& [key, value] : j.at("table").items()) {
    int n = 0, ell = 0;
    if (std::sscanf(key.c_str(), "%d,%d", &n, &ell) != 2)
      throw std::invalid_argument("table_from_json: malformed key '" + key + "'");
    data.table.emplace(std::make_pair(n, ell), poly_from_json(value));
  }
  return data;
}

OrderedJson report_to_json(const VerifyReport& report) {
  OrderedJson j;
  j["all_pass"] = report.all_pass();
  OrderedJson items = OrderedJson::array();
  for (const auto& it : report.items) {
    OrderedJson row;
    row["suite"] = it.suite;
    row["identity"] = it.identity;
    row["params"] = it.params;
    row["pass"] = it.pass;
    if (!it.detail.empty()) row["detail"] = it.detail;
    items.push_back(row);
  }
  j["checks"] = items;
  return j;
}

std::string zeros_to_csv(const std::string& family, int n, const Q& alpha, const Q& sigma1,
                         const RootReport& report) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "family,n,alpha,sigma1,root_index,root_float,interval_lo,interval_hi,all_real\n";
  int idx = 0;
  for (const auto& r : report.roots) {
    os << family << "," << n << "," << q_str(alpha) << "," << q_str(sigma1) << "," << idx++
       << "," << r.approx << "," << q_str(r.lo) << "," << q_str(r.hi) << ","
       << (report.all_real ? "true" : "false") << "\n";
  }
  return os.str();
}

}  // namespace chainpoly
