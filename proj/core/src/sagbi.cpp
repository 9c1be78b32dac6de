#include "resint/sagbi.hpp"

#include <algorithm>
#include <set>

#include "resint/asl.hpp"
#include "resint/generic_matrix.hpp"

namespace resint {

std::string MonomialAlgebraMap::legend() const {
  std::string out;
  for (std::size_t k = 0; k < labels.size(); ++k)
    out += variable(k).to_string() + " = " + labels[k].to_string() + "\n";
  return out;
}

MonomialAlgebraMap initial_generators(const ResidualInstance& instance) {
  MonomialAlgebraMap map;
  map.ambient = instance.ring;
  map.labels = instance.labels;
  for (const auto& l : instance.labels) map.targets.push_back(instance.at(l).leading_monomial());
  return map;
}

int exponent_rank(const std::vector<Monomial>& rows, std::size_t slots) {
  // Fraction-free elimination on the small integer exponent matrix.
  std::vector<std::vector<mpz_class>> a;
  for (const auto& t : rows) {
    std::vector<mpz_class> row(slots);
    for (auto [slot, e] : t.entries()) row[slot] = e;
    a.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < slots && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      mpz_class f = a[r][c], g = a[rank][c];
      for (std::size_t k = c; k < slots; ++k) a[r][k] = a[r][k] * g - a[rank][k] * f;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int semigroup_dimension(const MonomialAlgebraMap& map) { return exponent_rank(map.targets, map.ambient->size()); }

namespace {

std::vector<VariableId> tau_ascending(const ResidualInstance& instance) {
  const BPoset poset = make_b_poset(instance.m, instance.n);
  std::vector<GeneratorLabel> sorted = instance.labels;
  sort_chain(poset, sorted);
  std::vector<VariableId> out;
  for (const auto& l : sorted) {
    auto it = std::find(instance.labels.begin(), instance.labels.end(), l);
    out.push_back(VariableId::P(static_cast<int>(it - instance.labels.begin()) + 1));
  }
  return out;
}

Polynomial lift(const ResidualInstance& instance, const MonomialAlgebraMap& map, const Monomial& pm,
                const Ring& pring) {
  Polynomial p = Polynomial::constant(instance.ring, 1);
  for (auto [slot, e] : pm.entries()) {
    const auto& label = map.labels[map.index_of(pring.variables()[slot])];
    for (unsigned k = 0; k < e; ++k) p *= instance.at(label);
  }
  return p;
}

}  // namespace

MonomialOrder tau_order(const ResidualInstance& instance) { return MonomialOrder::tau(tau_ascending(instance)); }

RingPtr tau_ring(const ResidualInstance& instance, Field field) {
  auto vars = tau_ascending(instance);
  return Ring::make(vars, field, tau_order(instance));
}

ToricKernel toric_kernel(const ResidualInstance& instance, const Budget& budget) {
  const Field q = Field::rationals();
  const ResidualInstance local = instance.ring->field() == q ? instance : build_instance(instance.m, instance.n, q);
  auto map = initial_generators(local);
  auto pring = tau_ring(local, q);

  auto ambient = generic_variables(local.m, local.n);
  auto vars = ambient;
  for (const auto& v : pring->variables()) vars.push_back(v);
  auto graph_ring = Ring::make(vars, q, MonomialOrder::elimination(ambient, pring->order()));

  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < map.targets.size(); ++k) {
    Polynomial target = Polynomial::term(local.ring, Scalar::one(q), map.targets[k]).in_ring(graph_ring);
    gens.push_back(Polynomial::variable(graph_ring, map.variable(k)) - target);
  }
  auto basis = eliminate_basis(IdealBasis(graph_ring, std::move(gens)), ambient, pring, budget);
  return ToricKernel{pring, std::move(basis), local.labels};
}

SquarefreeReport verify_squarefree_initial(const ResidualInstance& instance, const ToricKernel& kernel) {
  SquarefreeReport report;
  const auto& elements = kernel.basis.elements();
  report.generators = elements.size();
  const Ring& pr = *kernel.ring;
  auto map = initial_generators(instance);

  std::map<VariableId, Polynomial> to_ambient;
  const Field& f = pr.field();
  const ResidualInstance local = instance.ring->field() == f ? instance : build_instance(instance.m, instance.n, f);
  for (std::size_t k = 0; k < map.targets.size(); ++k)
    to_ambient.emplace(map.variable(k), Polynomial::term(local.ring, Scalar::one(f), map.targets[k]));

  std::set<std::pair<std::size_t, std::size_t>> expected, seen;
  for (std::size_t i = 0; i < instance.labels.size(); ++i)
    for (std::size_t j = i + 1; j < instance.labels.size(); ++j)
      if (!comparable(instance.labels[i], instance.labels[j])) expected.emplace(i, j);
  report.incomparable_pairs = expected.size();

  for (const auto& g : elements) {
    const auto& terms = g.terms();
    bool binomial = terms.size() == 2 && terms[0].coeff.is_one() && (-terms[1].coeff).is_one();
    report.all_binomial = report.all_binomial && binomial;
    report.all_in_kernel = report.all_in_kernel && g.substitute(to_ambient, local.ring).is_zero();

    const Monomial& lm = g.leading_monomial();
    report.squarefree = report.squarefree && lm.is_squarefree();
    auto entries = lm.entries();
    if (entries.size() != 2 || lm.degree() != 2) {
      report.incomparable_products = false;
      continue;
    }
    std::size_t a = map.index_of(pr.variables()[entries[0].first]);
    std::size_t b = map.index_of(pr.variables()[entries[1].first]);
    if (a > b) std::swap(a, b);
    if (comparable(instance.labels[a], instance.labels[b])) report.incomparable_products = false;
    seen.emplace(a, b);
  }
  report.bijective = seen == expected && seen.size() == elements.size();
  return report;
}

SquarefreeReport verify_squarefree_initial(const ResidualInstance& instance, const Budget& budget) {
  return verify_squarefree_initial(instance, toric_kernel(instance, budget));
}

std::optional<std::vector<std::size_t>> factor_in_semigroup(const MonomialAlgebraMap& map, const Monomial& m) {
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, const Monomial& rest, std::size_t from) -> bool {
    if (rest.is_one()) return true;
    for (std::size_t k = from; k < map.targets.size(); ++k) {
      if (!map.targets[k].divides(rest)) continue;
      chosen.push_back(k);
      if (self(self, map.targets[k].quotient_of(rest), k)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, m, 0)) return std::nullopt;
  return chosen;
}

SagbiReport verify_sagbi(const ResidualInstance& instance, const ToricKernel& kernel, int degree) {
  SagbiReport report;
  auto map = initial_generators(instance);
  const std::size_t step_cap = 10000;
  for (const auto& g : kernel.basis.elements()) {
    ++report.binomials;
    if (static_cast<int>(g.total_degree()) > degree) {
      ++report.skipped;
      continue;
    }
    Polynomial f(instance.ring);
    for (const auto& t : g.terms()) {
      const Field& f0 = instance.ring->field();
      Scalar c = t.coeff.field() == f0 ? t.coeff
                                       : Scalar::from_rational(f0, t.coeff.rational().get_num(),
                                                               t.coeff.rational().get_den());
      f += lift(instance, map, t.mono, *kernel.ring) * c;
    }
    std::size_t steps = 0;
    std::string trace = g.to_string() + ":";
    while (!f.is_zero() && steps < step_cap) {
      auto factors = factor_in_semigroup(map, f.leading_monomial());
      if (!factors) break;
      Polynomial prod = Polynomial::constant(instance.ring, 1);
      for (auto k : *factors) {
        prod *= instance.at(map.labels[k]);
        trace += " " + map.labels[k].to_string();
      }
      trace += " |";
      f = f.sub_mul_term(f.leading_coeff() / prod.leading_coeff(), Monomial{}, prod);
      ++steps;
    }
    report.subduction_steps += steps;
    if (!f.is_zero()) {
      ++report.failures;
      report.failure_traces.push_back(trace + " remainder " + f.to_string());
    }
  }
  return report;
}

SagbiReport verify_sagbi(const ResidualInstance& instance, int degree, const Budget& budget) {
  return verify_sagbi(instance, toric_kernel(instance, budget), degree);
}

}  // namespace resint
