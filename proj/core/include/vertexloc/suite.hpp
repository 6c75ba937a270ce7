#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vertexloc/hilbert.hpp"
#include "vertexloc/vertex.hpp"

namespace vertexloc {

inline constexpr const char* kReportSchema = "vertexloc-report/1";

// unset fields take the suite's default
struct SuiteConfig {
  std::string suite;
  std::optional<int> degree;
  std::optional<std::pair<int, int>> charges;
  std::optional<int> modes;
  std::optional<int> N_max;
  std::optional<std::vector<int>> a, b;
  std::optional<std::vector<std::string>> f, g;
  std::uint64_t seed = 1;
  std::optional<int> samples;
  NegativeChargeRule neg_rule = NegativeChargeRule::kReflect;
  WhooksPrefactor prefactor = WhooksPrefactor::kOne;
  bool timing = false;
};

struct SuiteResult {
  bool pass = false;
  nlohmann::ordered_json report;
  int exit_code() const { return pass ? 0 : 1; }
  std::string text() const { return report.dump(2) + "\n"; }
};

const std::vector<std::string>& suite_names();
// throws std::invalid_argument for unknown suites and bad ranges
SuiteConfig resolve(const SuiteConfig& cfg);
SuiteResult run_suite(const SuiteConfig& cfg);

struct MatrixRequest {
  char kind = 'Y';  // Y or W
  int a = 1;
  std::string f = "1";
  ChargedPartition src;
  int cap = 3;
  NegativeChargeRule neg_rule = NegativeChargeRule::kReflect;
};

// file contents, format json or csv
std::string emit_matrix(const MatrixRequest& req, const std::string& format);
std::string emit_stabilization(const std::string& f, const ChargedPartition& p, const ChargedPartition& q, int N_max,
                               const std::string& format);

}  // namespace vertexloc
