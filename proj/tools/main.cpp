#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "vertexloc/cutoff.hpp"
#include "vertexloc/suite.hpp"

namespace fs = std::filesystem;
using namespace vertexloc;

namespace {

constexpr int kUsage = 2;

// --out wins, then $VERTEXLOC_OUT_DIR/<name>, else stdout
int write_out(const std::string& out, const std::string& name, const std::string& body) {
  fs::path path;
  if (!out.empty() && out != "-") {
    path = out;
  } else if (out.empty()) {
    if (const char* dir = std::getenv("VERTEXLOC_OUT_DIR"); dir && *dir) path = fs::path(dir) / name;
  }
  if (path.empty()) {
    std::cout << body;
    return 0;
  }
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream f(path, std::ios::binary);
  f << body;
  if (!f) {
    std::cerr << "vertexloc: cannot write " << path.string() << "\n";
    return kUsage;
  }
  return 0;
}

ChargedPartition label(const std::string& mu, int m) { return {Partition::parse(mu), m}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fock space vertex operators, cutoff localization and Hilbert scheme checks"};
  app.require_subcommand(1);

  std::string out, format = "json", f = "1", mu, nu, neg_rule = "reflect", prefactor = "1";
  int a = 1, m = 0, degree = 3, N = 12;
  std::vector<int> a_list, b_list, charges;
  std::vector<std::string> f_list, g_list;
  std::optional<int> degree_opt, modes_opt, N_opt, M_opt, samples_opt;
  std::uint64_t seed = 1;
  bool timing = false;
  std::string kind = "Y", suite;

  auto* matrix = app.add_subcommand("matrix", "nonzero matrix elements from one source label");
  matrix->add_option("--kind", kind, "Y or W")->check(CLI::IsMember({"Y", "W"}));
  matrix->add_option("--a", a, "charge shift");
  matrix->add_option("--f", f, "symmetric function, e.g. 2*e2 + e1*e1");
  matrix->add_option("--mu", mu, "source partition, e.g. 2,1");
  matrix->add_option("--m", m, "source charge");
  matrix->add_option("--degree", degree, "target size cap")->check(CLI::NonNegativeNumber);
  matrix->add_option("--neg-rule", neg_rule)->check(CLI::IsMember({"reflect", "plain"}));

  auto* check = app.add_subcommand("check", "run an identity suite");
  check->add_option("suite", suite, "suite name")->required();
  check->add_option("--a", a_list, "charge shifts")->delimiter(',');
  check->add_option("--b", b_list, "second charge shifts")->delimiter(',');
  check->add_option("--f", f_list, "insertions");
  check->add_option("--g", g_list, "second insertions");
  check->add_option("--m", charges, "charge range lo,hi")->delimiter(',')->expected(1, 2);
  check->add_option("--degree", degree_opt, "degree cap");
  check->add_option("--modes", modes_opt, "mode range");
  check->add_option("--N", N_opt, "largest cutoff");
  check->add_option("--M", M_opt, "unused except for validation");
  check->add_option("--samples", samples_opt, "random samples");
  check->add_option("--seed", seed, "random seed");
  check->add_option("--neg-rule", neg_rule)->check(CLI::IsMember({"reflect", "plain"}));
  check->add_option("--prefactor", prefactor, "1 or tpower")->check(CLI::IsMember({"1", "tpower"}));
  check->add_flag("--timing", timing, "add wall time to the report");

  auto* converge = app.add_subcommand("converge", "normalized cutoff pairing as N grows, M = -N");
  converge->add_option("--a", a, "charge shift");
  converge->add_option("--f", f);
  converge->add_option("--mu", mu);
  converge->add_option("--nu", nu);
  converge->add_option("--m", m);
  converge->add_option("--N", N, "largest N")->check(CLI::PositiveNumber);

  for (auto* sub : {matrix, check, converge}) {
    sub->add_option("--out", out, "output file, - for stdout");
    sub->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  NegativeChargeRule rule = neg_rule == "plain" ? NegativeChargeRule::kPlain : NegativeChargeRule::kReflect;
  try {
    if (*matrix) {
      MatrixRequest req{kind[0], a, f, label(mu, m), degree, rule};
      return write_out(out, "matrix." + format, emit_matrix(req, format));
    }
    if (*converge) {
      auto p = label(mu, m), q = label(nu, m + a);
      return write_out(out, "converge." + format, emit_stabilization(f, p, q, N, format));
    }
    if (format != "json") throw std::invalid_argument("check reports are json");
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.degree = degree_opt;
    cfg.modes = modes_opt;
    cfg.N_max = N_opt;
    cfg.samples = samples_opt;
    cfg.seed = seed;
    cfg.neg_rule = rule;
    cfg.prefactor = prefactor == "tpower" ? WhooksPrefactor::kTPower : WhooksPrefactor::kOne;
    cfg.timing = timing;
    if (!charges.empty()) cfg.charges = std::make_pair(charges.front(), charges.back());
    if (!a_list.empty()) cfg.a = a_list;
    if (!b_list.empty()) cfg.b = b_list;
    if (!f_list.empty()) cfg.f = f_list;
    if (!g_list.empty()) cfg.g = g_list;
    if (M_opt && N_opt) CutoffConfig{*M_opt, *N_opt}.validate();
    SuiteResult res = run_suite(cfg);
    int rc = write_out(out, suite + ".json", res.text());
    if (rc) return rc;
    std::cerr << suite << ": " << res.report["summary"]["failed"].get<long>() << " of "
              << res.report["summary"]["cases"].get<std::size_t>() << " cases failed\n";
    return res.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "vertexloc: " << e.what() << "\n";
    return kUsage;
  }
}
