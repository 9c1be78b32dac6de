#include <iostream>

#include <CLI11.hpp>

#include "resint/harness.hpp"

namespace {

using namespace resint;
using namespace resint::harness;

void add_common(CLI::App& cmd, RunConfig& cfg, std::string& field, std::string& out) {
  cmd.add_option("--m", cfg.m, "rows of X")->default_val(cfg.m);
  cmd.add_option("--n", cfg.n, "columns of X")->default_val(cfg.n);
  cmd.add_option("--field", field, "Q, Fp(p), Fp:p or ZZ/p");
  cmd.add_option("--out", out, std::string("output directory (default $") + kOutEnv + " or ./resint-out)");
}

void add_verify_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--degree-bound", cfg.degree_bound, "ASL-1 degree and Sagbi lift cap")->default_val(cfg.degree_bound);
  cmd.add_option("--budget-pairs", cfg.budget.max_pairs, "S-pair cap per Groebner run")->default_val(cfg.budget.max_pairs);
  cmd.add_option("--budget-terms", cfg.budget.max_terms, "term cap per intermediate polynomial")
      ->default_val(cfg.budget.max_terms);
  cmd.add_option("--budget-seconds", cfg.budget.wall_seconds, "wall-clock cap per run")
      ->default_val(cfg.budget.wall_seconds);
  cmd.add_option("--seed", cfg.seed, "seed for sampled checks")->default_val(cfg.seed);
  cmd.add_option("--asl-sample", cfg.asl_sample, "incomparable pairs to sample (0 = all)")->default_val(cfg.asl_sample);
  cmd.add_option("--jobs", cfg.jobs, "worker threads")->default_val(cfg.jobs);
  cmd.add_flag("--timings", cfg.timings, "record wall times in the report");
  cmd.add_flag("--verbose", cfg.verbose, "include cleared-denominator identities");
}

void finish_config(RunConfig& cfg, const std::string& field, const std::string& out) {
  if (!field.empty()) cfg.field = Field::parse(field);
  cfg.output_dir = out.empty() ? default_output_dir() : std::filesystem::path(out);
  cfg.validate();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residual intersection witnesses and their verification"};
  app.set_version_flag("--version", std::string("resint ") + kVersion);
  app.require_subcommand(1);

  RunConfig gen_cfg, ver_cfg;
  std::string gen_field, gen_out, ver_field, ver_out, checks = "all";
  int max_m = 12;

  auto* gen = app.add_subcommand("generate", "write generators, hsop, Hasse diagram and D");
  add_common(*gen, gen_cfg, gen_field, gen_out);

  auto* ver = app.add_subcommand("verify", "run verification checks and write report.json");
  add_common(*ver, ver_cfg, ver_field, ver_out);
  add_verify_options(*ver, ver_cfg);
  ver->add_option("--checks", checks, "comma-separated subset of radical,colon,asl,wonderful,sagbi,squarefree,"
                                      "transbasis,dims, or all")
      ->default_val(checks);

  auto* table = app.add_subcommand("table", "print the upper-bound comparison");
  table->add_option("--max-m", max_m, "largest m (at most 12)")->default_val(max_m);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      finish_config(gen_cfg, gen_field, gen_out);
      for (const auto& f : cmd_generate(gen_cfg)) std::cout << f.sha256 << "  " << f.name << "\n";
      return kOk;
    }
    if (ver->parsed()) {
      finish_config(ver_cfg, ver_field, ver_out);
      auto rep = cmd_verify(ver_cfg, parse_checks(checks));
      for (const auto& c : rep.checks) std::cout << c.name << ": " << c.status << "\n";
      std::cout << "report: " << (ver_cfg.output_dir / "report.json").string() << "\n";
      return rep.exit_code;
    }
    std::cout << cmd_table(max_m);
    return kOk;
  } catch (const IoError& e) {
    std::cerr << e.what() << "\n";
    return kFailed;
  } catch (const BadShape& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
}
