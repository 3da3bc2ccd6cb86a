#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "chainpoly/json_io.hpp"
#include "chainpoly/poly_props.hpp"
#include "chainpoly/verify.hpp"

namespace {

using namespace chainpoly;

// Exit codes: 0 pass, 1 failed checks, 2 usage or parameter errors.
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << content;
}

struct CommonOpts {
  std::string family = "jordan";
  int num_chains = 2;
  std::string alpha = "0";
  std::vector<std::string> sigmas;
  int nmax = 12;
};

std::vector<Q> parse_sigmas(const std::vector<std::string>& raw) {
  std::vector<Q> out;
  for (const auto& s : raw) out.push_back(parse_q(s));
  return out;
}

int cmd_build(const CommonOpts& opt, const std::string& output) {
  Q alpha = parse_q(opt.alpha);
  std::vector<Q> sigmas = parse_sigmas(opt.sigmas);
  OrderedJson j;
  if (opt.family == "jordan") {
    JordanChainFamily fam(opt.num_chains, alpha, sigmas);
    j = table_to_json(fam, opt.nmax);
  } else if (opt.family == "diag") {
    DiagChainFamily fam(opt.num_chains, alpha, sigmas);
    j = table_to_json(fam, opt.nmax);
  } else {
    throw std::invalid_argument("unknown family '" + opt.family + "'");
  }
  write_output(output, j.dump(2) + "\n");
  return kExitPass;
}

int cmd_verify(const std::string& suite, const CommonOpts& opt, const std::string& family,
               int order, const std::string& output) {
  VerifyConfig cfg;
  cfg.family = family;
  cfg.num_chains = opt.num_chains;
  cfg.alpha = parse_q(opt.alpha);
  cfg.sigmas = parse_sigmas(opt.sigmas);
  cfg.nmax = opt.nmax;
  cfg.order = order;
  VerifyReport report = run_suite(suite, cfg);
  write_output(output, report_to_json(report).dump(2) + "\n");
  return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_zeros(const CommonOpts& opt, int n, const std::string& width_str,
              const std::string& output) {
  Q alpha = parse_q(opt.alpha);
  std::vector<Q> sigmas = parse_sigmas(opt.sigmas);
  Q width = parse_q(width_str);
  RootReport report;
  Q sigma1 = sigmas.empty() ? Q(0) : sigmas[0];
  if (opt.family == "jordan") {
    JordanChainFamily fam(2, alpha, sigmas);
    report = zeros_report(fam, n, width);
  } else if (opt.family == "diag") {
    DiagChainFamily fam(2, alpha, sigmas);
    report = zeros_report(fam, n, width);
  } else {
    throw std::invalid_argument("unknown family '" + opt.family + "'");
  }
  write_output(output, zeros_to_csv(opt.family, n, alpha, sigma1, report));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chain polynomial tables, identity verification and root certification"};
  app.require_subcommand(1);

  CommonOpts opt;
  std::string output = "-";

  auto add_common = [&](CLI::App* sub, bool with_family = true) {
    if (with_family)
      sub->add_option("--family", opt.family, "jordan | diag")
          ->check(CLI::IsMember({"jordan", "diag"}));
    sub->add_option("--N", opt.num_chains, "number of chains")->check(CLI::PositiveNumber);
    sub->add_option("--alpha", opt.alpha, "rational parameter, e.g. 1/2");
    sub->add_option("--sigma", opt.sigmas, "chain seeds sigma_1, sigma_2, ... (repeatable)");
    sub->add_option("--output,-o", output, "output path, '-' for stdout");
  };

  auto* build = app.add_subcommand("build", "write the omega table as JSON");
  add_common(build);
  build->add_option("--nmax", opt.nmax, "largest n in the table")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "run a verification suite, JSON report");
  std::string suite = "all";
  std::string verify_family = "both";
  int order = 12;
  verify->add_option("--suite", suite, "sl2|ket|ode|recur|genfunc|casimir|biorth|module|all");
  verify->add_option("--family", verify_family, "jordan | diag | both")
      ->check(CLI::IsMember({"jordan", "diag", "both"}));
  verify->add_option("--N", opt.num_chains, "number of chains")->check(CLI::PositiveNumber);
  verify->add_option("--alpha", opt.alpha, "rational parameter");
  verify->add_option("--sigma", opt.sigmas, "chain seeds (repeatable)");
  verify->add_option("--nmax", opt.nmax, "verification range in n");
  verify->add_option("--order", order, "generating-function truncation order");
  verify->add_option("--output,-o", output, "output path, '-' for stdout");

  auto* zeros = app.add_subcommand("zeros", "certified real roots of w_{n,1} as CSV");
  add_common(zeros);
  int zn = 1;
  std::string width = "1/1099511627776";
  zeros->add_option("--n", zn, "chain position n (>= 1)")->check(CLI::PositiveNumber);
  zeros->add_option("--refine-width", width, "isolating interval width (rational)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(opt, output);
    if (verify->parsed()) return cmd_verify(suite, opt, verify_family, order, output);
    if (zeros->parsed()) return cmd_zeros(opt, zn, width, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
