#include "resint/instance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <optional>
#include <thread>

#include "resint/generic_matrix.hpp"

namespace resint {

const Polynomial& ResidualInstance::at(const GeneratorLabel& label) const {
  auto it = polynomials.find(label);
  if (it == polynomials.end()) throw BadIndex("label " + label.to_string() + " is not a generator");
  return it->second;
}

std::vector<Polynomial> ResidualInstance::generators() const {
  std::vector<Polynomial> out;
  for (const auto& l : labels) out.push_back(at(l));
  return out;
}

ResidualInstance build_instance(int m, int n, Field field) {
  if (n < 1 || m < n) throw BadShape("need m >= n >= 1, got (" + std::to_string(m) + "," + std::to_string(n) + ")");
  ResidualInstance inst;
  inst.m = m;
  inst.n = n;
  inst.ring = generic_ring(m, n, field);
  inst.labels = all_labels(m, n);
  for (const auto& l : inst.labels) {
    Polynomial p = l.is_q() ? q_entry(inst.ring, m, n, l.q) : minor(inst.ring, m, n, l.rows);
    inst.polynomials.emplace(l, std::move(p));
  }
  return inst;
}

std::vector<std::vector<GeneratorLabel>> hsop_classes(int m, int n) {
  if (n == 1) {
    std::vector<std::vector<GeneratorLabel>> out;
    for (int i = 1; i <= m; ++i) out.push_back({GeneratorLabel::Minor({i})});
    return out;
  }
  return rank_classes(make_b_poset(m, n));
}

std::vector<Polynomial> hsop(const ResidualInstance& instance) {
  std::vector<Polynomial> out;
  for (const auto& cls : hsop_classes(instance)) {
    Polynomial sum(instance.ring);
    for (const auto& l : cls) sum += instance.at(l);
    out.push_back(std::move(sum));
  }
  return out;
}

namespace {

RingPtr grevlex_ring(int m, int n, Field field) {
  auto vars = generic_variables(m, n);
  return Ring::make(vars, field, MonomialOrder::grevlex(vars));
}

std::vector<Polynomial> moved(const std::vector<Polynomial>& ps, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& p : ps) out.push_back(p.in_ring(ring));
  return out;
}

}  // namespace

HsopCertificate verify_ara_witness(const ResidualInstance& instance, const VerifyOptions& options) {
  const ResidualInstance local = instance.ring->field() == options.field
                                     ? instance
                                     : build_instance(instance.m, instance.n, options.field);
  auto ring = grevlex_ring(local.m, local.n, options.field);

  HsopCertificate cert;
  cert.m = local.m;
  cert.n = local.n;
  cert.field = options.field.name();
  cert.hsop = hsop(instance);

  // Inclusion hsop ⊆ RI: every element is a sum of generators of its class.
  const auto classes = hsop_classes(local);
  const auto local_hsop = hsop(local);
  cert.hsop_in_ideal = classes.size() == local_hsop.size();
  for (std::size_t k = 0; k < classes.size() && cert.hsop_in_ideal; ++k) {
    Polynomial rest = local_hsop[k];
    for (const auto& l : classes[k]) rest -= local.at(l);
    cert.hsop_in_ideal = rest.is_zero();
  }

  cert.checks.resize(local.labels.size());
  for (std::size_t k = 0; k < local.labels.size(); ++k) cert.checks[k].generator = local.labels[k];

  std::optional<GroebnerBasis> basis;
  try {
    basis.emplace(buchberger(IdealBasis(ring, moved(local_hsop, ring)), options.budget));
  } catch (const BudgetExceeded& e) {
    throw CertificateIncomplete(e, cert);
  }

  std::vector<char> done(local.labels.size(), 0);
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::optional<BudgetExceeded> failure;

  auto worker = [&] {
    for (std::size_t k = next++; k < local.labels.size(); k = next++) {
      {
        std::lock_guard lock(failure_mutex);
        if (failure) return;
      }
      auto& check = cert.checks[k];
      Polynomial g = local.at(check.generator).in_ring(ring);
      try {
        check.ideal_member = basis->contains(g);
        check.verdict = radical_membership(g, *basis, options.budget, &check.trace);
        done[k] = 1;
      } catch (const BudgetExceeded& e) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure.emplace(e);
        return;
      }
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  cert.complete = std::all_of(done.begin(), done.end(), [](char c) { return c != 0; });
  cert.verdict = cert.complete && cert.hsop_in_ideal &&
                 std::all_of(cert.checks.begin(), cert.checks.end(), [](const auto& c) { return c.verdict; });
  if (failure) {
    for (std::size_t k = 0; k < done.size(); ++k)
      if (!done[k]) cert.checks[k].trace.verdict = "budget-exceeded";
    throw CertificateIncomplete(*failure, cert);
  }
  return cert;
}

bool verify_colon_identity(const ResidualInstance& instance, const VerifyOptions& options, TraceRecord* trace) {
  const ResidualInstance local = instance.ring->field() == options.field
                                     ? instance
                                     : build_instance(instance.m, instance.n, options.field);
  auto ring = grevlex_ring(local.m, local.n, options.field);
  std::vector<Polynomial> qs, ys;
  for (int i = 1; i <= local.m; ++i) qs.push_back(local.at(GeneratorLabel::Q(i)).in_ring(ring));
  for (int j = 1; j <= local.n; ++j) ys.push_back(Polynomial::variable(ring, VariableId::Y(j)));

  auto start = std::chrono::steady_clock::now();
  IdealBasis qideal(ring, qs);
  auto quotient = colon_ideal(qideal, IdealBasis(ring, ys), options.budget);
  bool equal = ideal_equal(quotient, local.ideal().in_ring(ring), options.budget);
  if (trace != nullptr) {
    trace->operation = "colon_identity";
    trace->input_hash = qideal.hash();
    trace->order = ring->order().name();
    trace->wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    trace->verdict = equal ? "equal" : "different";
  }
  return equal;
}

IdealBasis Specialization::ideal() const {
  std::vector<Polynomial> gens;
  for (const auto& [l, p] : generators) gens.push_back(p);
  return IdealBasis(ring, std::move(gens));
}

const Polynomial& Specialization::at(const GeneratorLabel& label) const {
  for (const auto& [l, p] : generators)
    if (l == label) return p;
  throw BadIndex("label " + label.to_string() + " is not a generator");
}

Specialization specialize(const ResidualInstance& instance, const std::map<VariableId, Polynomial>& assignment,
                          const RingPtr& target) {
  for (const auto& v : generic_variables(instance.m, instance.n))
    if (!assignment.count(v)) throw BadAssignment("no value for " + v.to_string());
  Specialization out;
  out.ring = target;
  for (const auto& l : instance.labels) out.generators.emplace_back(l, instance.at(l).substitute(assignment, target));
  for (const auto& h : hsop(instance)) out.hsop.push_back(h.substitute(assignment, target));
  return out;
}

std::vector<UpperBoundRow> upper_bound_table(int max_m) {
  if (max_m < 2) throw BadShape("upper-bound table needs max_m >= 2");
  std::vector<UpperBoundRow> rows;
  for (int m = 2; m <= max_m; ++m)
    for (int n = 1; n <= m; ++n) {
      UpperBoundRow r{m, n, (m * n - n * n + 1) + m, n * (m - n + 1) + 1, 0};
      r.difference = r.naive - r.rank_sum;
      if (r.difference != m - n)
        throw StructureViolation("bound difference at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      rows.push_back(r);
    }
  return rows;
}

}  // namespace resint
