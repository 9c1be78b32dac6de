#include "resint/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "resint/asl.hpp"
#include "resint/hash.hpp"
#include "resint/poset.hpp"
#include "resint/sagbi.hpp"

namespace resint::harness {

namespace {

Field verify_field(const RunConfig& c) { return c.field.value_or(Field::prime()); }

Json trace_json(const TraceRecord& t, bool timings) {
  Json j;
  j["operation"] = t.operation;
  j["input_hash"] = t.input_hash;
  j["order"] = t.order;
  j["pairs"] = t.pairs;
  j["max_terms"] = t.max_terms;
  if (timings) j["wall_seconds"] = t.wall_seconds;
  j["verdict"] = t.verdict;
  return j;
}

Json stats_json(const RunStats& s, bool timings) {
  Json j;
  j["pairs_processed"] = s.pairs_processed;
  j["pairs_discarded"] = s.pairs_discarded;
  j["max_terms"] = s.max_terms;
  j["basis_size"] = s.basis_size;
  if (timings) j["wall_seconds"] = s.wall_seconds;
  return j;
}

Json certificate_json(const HsopCertificate& c, bool timings) {
  Json j;
  j["field"] = c.field;
  j["hsop_size"] = c.hsop.size();
  j["hsop_in_ideal"] = c.hsop_in_ideal;
  j["complete"] = c.complete;
  Json gens = Json::array();
  for (const auto& g : c.checks) {
    Json e;
    e["label"] = g.generator.to_string();
    e["verdict"] = g.verdict;
    e["ideal_member"] = g.ideal_member;
    e["trace"] = trace_json(g.trace, timings);
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  return j;
}

std::vector<std::string> kernel_lines(const ToricKernel& k) {
  std::vector<std::string> out;
  for (const auto& g : k.basis.elements()) out.push_back(g.to_string());
  return out;
}

CheckResult check_radical(const RunConfig& c) {
  CheckResult r{"radical", "", false, Json::object()};
  VerifyOptions opts{verify_field(c), c.budget, c.jobs};
  try {
    auto cert = verify_ara_witness(build_instance(c.m, c.n, opts.field), opts);
    r.verdict = cert.verdict;
    r.details = certificate_json(cert, c.timings);
  } catch (const CertificateIncomplete& e) {
    r.status = "budget-exceeded";
    r.details = certificate_json(e.partial(), c.timings);
    r.details["budget"] = stats_json(e.stats(), c.timings);
  }
  return r;
}

CheckResult check_colon(const RunConfig& c) {
  CheckResult r{"colon", "", false, Json::object()};
  VerifyOptions opts{verify_field(c), c.budget, c.jobs};
  TraceRecord trace;
  r.verdict = verify_colon_identity(build_instance(c.m, c.n, opts.field), opts, &trace);
  r.details["field"] = opts.field.name();
  r.details["trace"] = trace_json(trace, c.timings);
  return r;
}

CheckResult check_asl(const RunConfig& c) {
  CheckResult r{"asl", "", false, Json::object()};
  auto inst = build_instance(c.m, c.n);
  auto a1 = verify_asl1(inst, c.degree_bound);
  auto a2 = verify_asl2(inst, Asl2Options{c.asl_sample, c.seed});
  Json j1;
  j1["degree_bound"] = a1.degree_bound;
  j1["standard_monomials"] = a1.standard_monomials;
  j1["products_checked"] = a1.products_checked;
  j1["distinct_leading"] = a1.distinct_leading;
  j1["spanning"] = a1.spanning;
  Json j2;
  j2["incomparable_pairs"] = a2.incomparable_pairs;
  j2["checked"] = a2.checked;
  j2["failures"] = a2.failures;
  Json rels = Json::array();
  for (const auto& rel : a2.relations) rels.push_back(rel.to_string());
  j2["relations"] = std::move(rels);
  r.details["asl1"] = std::move(j1);
  r.details["asl2"] = std::move(j2);
  r.verdict = a1.ok() && a2.ok();
  return r;
}

CheckResult check_wonderful(const RunConfig& c) {
  CheckResult r{"wonderful", "", false, Json::object()};
  auto b = make_b_poset(c.m, c.n);
  r.details["elements"] = b.labels.size();
  r.details["hasse_edges"] = b.poset.hasse_edges().size();
  r.details["poset_rank"] = b.poset.poset_rank();
  r.details["partial_order"] = b.poset.is_partial_order();
  r.verdict = b.poset.is_partial_order() && b.poset.is_wonderful();
  r.details["wonderful"] = r.verdict;
  return r;
}

CheckResult check_sagbi(const RunConfig& c) {
  CheckResult r{"sagbi", "", false, Json::object()};
  auto inst = build_instance(c.m, c.n);
  auto kernel = toric_kernel(inst, c.budget);
  auto rep = verify_sagbi(inst, kernel, std::max(2, c.degree_bound));
  r.details["kernel"] = kernel_lines(kernel);
  r.details["binomials"] = rep.binomials;
  r.details["skipped"] = rep.skipped;
  r.details["subduction_steps"] = rep.subduction_steps;
  r.details["failures"] = rep.failures;
  r.details["failure_traces"] = rep.failure_traces;
  r.verdict = rep.ok();
  return r;
}

CheckResult check_squarefree(const RunConfig& c) {
  CheckResult r{"squarefree", "", false, Json::object()};
  auto inst = build_instance(c.m, c.n);
  auto kernel = toric_kernel(inst, c.budget);
  auto rep = verify_squarefree_initial(inst, kernel);
  r.details["order"] = kernel.ring->order().name();
  r.details["kernel"] = kernel_lines(kernel);
  r.details["generators"] = rep.generators;
  r.details["incomparable_pairs"] = rep.incomparable_pairs;
  r.details["all_binomial"] = rep.all_binomial;
  r.details["all_in_kernel"] = rep.all_in_kernel;
  r.details["squarefree"] = rep.squarefree;
  r.details["incomparable_products"] = rep.incomparable_products;
  r.details["bijective"] = rep.bijective;
  r.verdict = rep.ok();
  return r;
}

CheckResult check_transbasis(const RunConfig& c) {
  CheckResult r{"transbasis", "", false, Json::object()};
  auto cert = verify_transcendence_basis(c.m, c.n, c.budget);
  Json d = Json::array();
  for (const auto& e : cert.d.elements) d.push_back(Json{{"name", e.name}, {"label", e.label.to_string()}});
  Json spec = Json::array();
  for (const auto& s : cert.specialized)
    spec.push_back(Json{{"name", s.element.name}, {"specialized", s.substituted.to_string()}, {"matches", s.matches}});
  Json rewrites = Json::array();
  for (const auto& w : cert.rewrites) {
    Json e;
    e["label"] = w.label.to_string();
    e["phase"] = w.phase;
    e["expr"] = expr_json(*w.expr);
    Json den = Json::array();
    for (const auto& [l, k] : w.denominator) den.push_back(Json::array({l.to_string(), k}));
    e["denominator"] = std::move(den);
    e["verified"] = w.verified;
    if (c.verbose) e["identity"] = w.cleared_lhs.to_string() + " = " + w.numerator.to_string();
    rewrites.push_back(std::move(e));
  }
  r.details["D"] = std::move(d);
  r.details["specialized"] = std::move(spec);
  r.details["exponent_rank"] = cert.independence.rank;
  r.details["supports_distinct"] = cert.independence.supports_distinct;
  r.details["jacobian_rank"] = jacobian_rank(c.m, c.n, c.seed + 1);
  r.details["rewrites"] = std::move(rewrites);
  r.details["dimension"] = cert.dimension;
  r.verdict = cert.ok();
  return r;
}

CheckResult check_dims(const RunConfig& c) {
  CheckResult r{"dims", "", false, Json::object()};
  const int poset = make_b_poset(c.m, c.n).poset.poset_rank();
  const int semigroup = semigroup_dimension(initial_generators(build_instance(c.m, c.n)));
  auto cert = verify_transcendence_basis(c.m, c.n, c.budget);
  const int formula = c.n * (c.m - c.n + 1) + 1;
  r.details["poset_rank"] = poset;
  r.details["semigroup_rank"] = semigroup;
  r.details["transbasis_dimension"] = cert.dimension;
  r.details["transbasis_certified"] = cert.ok();
  r.details["formula"] = formula;
  r.details["witness_size"] = hsop_classes(c.m, c.n).size();
  const bool agree = poset == semigroup && semigroup == cert.dimension && cert.dimension == formula;
  r.details["agree"] = agree;
  r.verdict = agree && cert.ok();
  if (!agree) r.status = "inconsistent";
  return r;
}

CheckResult run_one(const RunConfig& c, const std::string& name) {
  CheckResult r{name, "", false, Json::object()};
  try {
    if (name == "radical") r = check_radical(c);
    else if (name == "colon") r = check_colon(c);
    else if (name == "asl") r = check_asl(c);
    else if (name == "wonderful") r = check_wonderful(c);
    else if (name == "sagbi") r = check_sagbi(c);
    else if (name == "squarefree") r = check_squarefree(c);
    else if (name == "transbasis") r = check_transbasis(c);
    else if (name == "dims") r = check_dims(c);
    else throw std::invalid_argument("unknown check " + name);
  } catch (const BudgetExceeded& e) {
    r.status = "budget-exceeded";
    r.details["error"] = e.what();
    r.details["budget"] = stats_json(e.stats(), c.timings);
  } catch (const StructureViolation& e) {
    r.status = "inconsistent";
    r.details["error"] = e.what();
  } catch (const std::exception& e) {
    r.status = "error";
    r.details["error"] = e.what();
  }
  if (r.status.empty()) r.status = r.verdict ? "pass" : "fail";
  return r;
}

int status_code(const std::string& s) {
  if (s == "inconsistent") return kInconsistent;
  if (s == "budget-exceeded") return kBudget;
  if (s == "pass") return kOk;
  return kFailed;
}

int severity(int code) {
  switch (code) {
    case kInconsistent: return 3;
    case kBudget: return 2;
    case kFailed: return 1;
    default: return 0;
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out.flush()) throw IoError("write to " + path.string() + " failed");
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create directory " + dir.string());
}

Json config_json(const RunConfig& c, const std::string& field) {
  Json j;
  j["m"] = c.m;
  j["n"] = c.n;
  j["field"] = field;
  j["degree_bound"] = c.degree_bound;
  j["budget"] = Json{{"max_pairs", c.budget.max_pairs},
                     {"max_terms", c.budget.max_terms},
                     {"wall_seconds", c.budget.wall_seconds}};
  j["seed"] = c.seed;
  j["asl_sample"] = c.asl_sample;
  return j;
}

}  // namespace

void RunConfig::validate() const {
  if (n < 1 || m < n) throw BadShape("need m >= n >= 1, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  if (static_cast<std::size_t>(m * n + n) > kMaxVariables)
    throw BadShape("m*n + n exceeds the " + std::to_string(kMaxVariables) + "-variable limit");
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be non-negative");
  if (budget.max_pairs == 0 || budget.max_terms == 0 || !(budget.wall_seconds > 0))
    throw std::invalid_argument("budgets must be positive");
  if (jobs == 0) throw std::invalid_argument("jobs must be at least 1");
}

std::filesystem::path default_output_dir() {
  if (const char* env = std::getenv(kOutEnv); env != nullptr && *env != '\0') return env;
  return "resint-out";
}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{"radical", "colon",      "asl",        "wonderful",
                                              "sagbi",   "squarefree", "transbasis", "dims"};
  return names;
}

std::vector<std::string> parse_checks(const std::string& text) {
  if (text == "all") return all_checks();
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(all_checks().begin(), all_checks().end(), item) == all_checks().end())
      throw std::invalid_argument("unknown check '" + item + "'");
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("no checks selected");
  return out;
}

std::string poly_lines(const std::vector<Polynomial>& polys) {
  std::string out;
  for (const auto& p : polys) out += p.to_string() + "\n";
  return out;
}

std::string hsop_text(int m, int n, Field field) { return poly_lines(hsop(build_instance(m, n, field))); }

std::vector<GeneratedFile> cmd_generate(const RunConfig& config) {
  config.validate();
  const Field field = config.field.value_or(Field::rationals());
  auto inst = build_instance(config.m, config.n, field);
  auto b = make_b_poset(config.m, config.n);

  std::string labels, dset;
  for (const auto& l : inst.labels) labels += l.to_string() + "\n";
  for (const auto& e : build_D(config.m, config.n).elements) dset += e.name + " = " + e.label.to_string() + "\n";

  std::vector<std::pair<std::string, std::string>> files = {
      {"generators.poly", poly_lines(inst.generators())},
      {"labels.txt", labels},
      {"hsop.poly", poly_lines(hsop(inst))},
      {"hasse.dot", b.poset.to_dot("B_" + std::to_string(config.m) + "_" + std::to_string(config.n))},
      {"dset.txt", dset},
  };

  ensure_dir(config.output_dir);
  std::vector<GeneratedFile> out;
  Json manifest;
  manifest["tool"] = Json{{"name", "resint"}, {"version", kVersion}};
  manifest["config"] = config_json(config, field.name());
  Json hashes;
  for (const auto& [name, text] : files) {
    write_file(config.output_dir / name, text);
    out.push_back({name, sha256_hex(text)});
    hashes[name] = out.back().sha256;
  }
  manifest["files"] = std::move(hashes);
  write_file(config.output_dir / "manifest.json", manifest.dump(2) + "\n");
  return out;
}

Json expr_json(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Leaf:
      return e.label.to_string();
    case Expr::Kind::Product: {
      Json j = Json::array({"*"});
      for (const auto& f : e.factors) j.push_back(expr_json(*f));
      return j;
    }
    case Expr::Kind::Sum: {
      Json j = Json::array({"+"});
      for (const auto& [c, t] : e.terms) {
        if (c == 1) {
          j.push_back(expr_json(*t));
          continue;
        }
        Json term = Json::array({"*", c});
        if (t->kind == Expr::Kind::Product)
          for (const auto& f : t->factors) term.push_back(expr_json(*f));
        else
          term.push_back(expr_json(*t));
        j.push_back(std::move(term));
      }
      return j;
    }
    case Expr::Kind::Quotient: {
      Json j = Json::array({"/", expr_json(*e.factors[0])});
      for (const auto& d : e.denominator) j.push_back(d.to_string());
      return j;
    }
  }
  return nullptr;
}

VerificationReport run_checks(const RunConfig& config, const std::vector<std::string>& checks) {
  config.validate();
  if (checks.empty()) throw std::invalid_argument("no checks selected");

  std::vector<CheckResult> results(checks.size());
  const unsigned workers = std::min<unsigned>(config.jobs, static_cast<unsigned>(checks.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) results[i] = run_one(config, checks[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) results[i] = run_one(config, checks[i]);
      });
    for (auto& t : pool) t.join();
  }

  VerificationReport rep;
  const auto hsop = hsop_text(config.m, config.n);
  Json& j = rep.json;
  j["tool"] = Json{{"name", "resint"}, {"version", kVersion}};
  j["config"] = config_json(config, verify_field(config).name());
  j["config"]["checks"] = checks;
  j["legend"] = Json::array();
  {
    std::stringstream legend(initial_generators(build_instance(config.m, config.n)).legend());
    for (std::string line; std::getline(legend, line);) j["legend"].push_back(line);
  }
  Json lines = Json::array();
  {
    std::stringstream ss(hsop);
    for (std::string line; std::getline(ss, line);) lines.push_back(line);
  }
  j["hsop"] = std::move(lines);
  j["artifacts"] = Json{{"hsop.poly", sha256_hex(hsop)}};

  Json arr = Json::array();
  int worst = kOk;
  for (const auto& r : results) {
    Json e;
    e["name"] = r.name;
    e["status"] = r.status;
    e["verdict"] = r.verdict;
    e["details"] = r.details;
    arr.push_back(std::move(e));
    int code = status_code(r.status);
    if (severity(code) > severity(worst)) worst = code;
  }
  j["checks"] = std::move(arr);
  j["exit_code"] = worst;
  rep.checks = std::move(results);
  rep.exit_code = worst;
  return rep;
}

VerificationReport cmd_verify(const RunConfig& config, const std::vector<std::string>& checks) {
  auto rep = run_checks(config, checks);
  ensure_dir(config.output_dir);
  write_file(config.output_dir / "report.json", rep.text());
  return rep;
}

std::string cmd_table(int max_m) {
  if (max_m > 12) throw BadShape("table is limited to max_m <= 12");
  auto rows = upper_bound_table(max_m);
  std::ostringstream out;
  out << std::setw(3) << "m" << std::setw(4) << "n" << std::setw(8) << "naive" << std::setw(10) << "rank-sum"
      << std::setw(12) << "difference" << "\n";
  for (const auto& r : rows)
    out << std::setw(3) << r.m << std::setw(4) << r.n << std::setw(8) << r.naive << std::setw(10) << r.rank_sum
        << std::setw(12) << r.difference << "\n";
  return out.str();
}

}  // namespace resint::harness
