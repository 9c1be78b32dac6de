#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "resint/appendix.hpp"
#include "resint/groebner.hpp"
#include "resint/instance.hpp"

namespace resint::harness {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kOutEnv = "RESINT_OUT";

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,         // some verdict is false
  kBudget = 2,         // a check ran out of budget; the report is partial
  kInconsistent = 3,   // two computations of one number disagree
  kUsage = 64,         // invalid configuration
};

struct RunConfig {
  int m = 4;
  int n = 2;
  std::optional<Field> field;  // generate: Q, Gröbner-heavy checks: F_32003
  int degree_bound = 3;
  Budget budget;
  std::uint64_t seed = 0;
  std::size_t asl_sample = 0;  // 0 checks every incomparable pair
  unsigned jobs = 1;
  bool timings = false;
  bool verbose = false;
  std::filesystem::path output_dir;

  /// Throws BadShape or std::invalid_argument.
  void validate() const;
};

/// $RESINT_OUT if set, else ./resint-out.
std::filesystem::path default_output_dir();

const std::vector<std::string>& all_checks();
/// Comma-separated names or "all"; throws std::invalid_argument on unknown names.
std::vector<std::string> parse_checks(const std::string& text);

/// One polynomial per line in canonical text.
std::string poly_lines(const std::vector<Polynomial>& polys);
std::string hsop_text(int m, int n, Field field = Field::rationals());

struct GeneratedFile {
  std::string name;
  std::string sha256;
};

/// generators.poly, labels.txt, hsop.poly, hasse.dot, dset.txt and
/// manifest.json in config.output_dir. Throws IoError.
std::vector<GeneratedFile> cmd_generate(const RunConfig& config);

struct CheckResult {
  std::string name;
  std::string status;  // pass, fail, budget-exceeded, inconsistent, error
  bool verdict = false;
  Json details;
};

struct VerificationReport {
  Json json;
  std::vector<CheckResult> checks;
  int exit_code = kOk;

  std::string text() const { return json.dump(2) + "\n"; }
};

/// Runs the checks; assembly order follows `checks` whatever the worker count.
VerificationReport run_checks(const RunConfig& config, const std::vector<std::string>& checks);
/// run_checks plus report.json in config.output_dir (IoError if unwritable).
VerificationReport cmd_verify(const RunConfig& config, const std::vector<std::string>& checks);

/// Throws BadShape unless 2 <= max_m <= 12.
std::string cmd_table(int max_m);

/// Expression tree as nested prefix arrays: ["/", ["+", ...], "Q1"].
Json expr_json(const Expr& e);

}  // namespace resint::harness
