#include "resint/ideal_ops.hpp"

#include <algorithm>

#include "resint/hash.hpp"

namespace resint {

namespace {

RingPtr adjoin(const Ring& ring, const VariableId& v, MonomialOrder order) {
  auto vars = ring.variables();
  vars.push_back(v);
  return Ring::make(std::move(vars), ring.field(), std::move(order));
}

void fill_trace(TraceRecord* trace, std::string operation, std::string hash, const MonomialOrder& order,
                const RunStats& stats, bool verdict) {
  if (trace == nullptr) return;
  trace->operation = std::move(operation);
  trace->input_hash = std::move(hash);
  trace->order = order.name();
  trace->pairs = stats.pairs_processed;
  trace->max_terms = stats.max_terms;
  trace->wall_seconds = stats.wall_seconds;
  trace->verdict = verdict ? "member" : "not-member";
}

std::string membership_hash(const std::string& ideal_hash, const Polynomial& f) {
  return sha256_hex(ideal_hash + "|" + f.to_string());
}

Polynomial rabinowitsch(const Polynomial& f, const RingPtr& ext, const VariableId& t) {
  return Polynomial::constant(ext, 1) - Polynomial::variable(ext, t) * f.in_ring(ext);
}

// Smallest set of slots meeting every support mask (branch on an uncovered edge).
std::size_t min_hitting_set(const std::vector<std::uint64_t>& edges, std::uint64_t chosen, std::size_t size,
                            std::size_t best) {
  if (size >= best) return best;
  for (auto e : edges) {
    if ((e & chosen) != 0) continue;
    for (std::uint64_t rest = e; rest != 0; rest &= rest - 1) {
      std::uint64_t bit = rest & (~rest + 1);
      best = min_hitting_set(edges, chosen | bit, size + 1, best);
    }
    return best;
  }
  return size;
}

}  // namespace

VariableId fresh_slack(const Ring& ring) {
  for (int k = 0;; ++k)
    if (!ring.has(VariableId::T(k))) return VariableId::T(k);
}

bool radical_membership(const Polynomial& f, const IdealBasis& ideal, const Budget& budget,
                        TraceRecord* trace) {
  const Ring& r = *ideal.ring();
  const VariableId t = fresh_slack(r);
  auto ext = adjoin(r, t, r.order().with_smallest(t));
  auto gens = ideal.in_ring(ext).generators();
  gens.push_back(rabinowitsch(f, ext, t));
  auto gb = buchberger(IdealBasis(ext, std::move(gens)), budget);
  bool member = gb.is_unit();
  fill_trace(trace, "radical_membership", membership_hash(ideal.hash(), f), ext->order(), gb.stats(), member);
  return member;
}

bool radical_membership(const Polynomial& f, const GroebnerBasis& basis, const Budget& budget,
                        TraceRecord* trace) {
  const Ring& r = *basis.ring();
  if (basis.contains(f)) {
    fill_trace(trace, "radical_membership", membership_hash(basis.ideal().hash(), f), r.order(), {}, true);
    return true;
  }
  const VariableId t = fresh_slack(r);
  auto ext = adjoin(r, t, r.order().with_smallest(t));
  auto gb = extend_basis(basis, {rabinowitsch(f, ext, t)}, budget);
  bool member = gb.is_unit();
  fill_trace(trace, "radical_membership", membership_hash(basis.ideal().hash(), f), ext->order(), gb.stats(),
             member);
  return member;
}

IdealBasis intersect(const IdealBasis& a, const IdealBasis& b, const Budget& budget) {
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return IdealBasis(ring, {});
  const VariableId t = fresh_slack(*ring);
  auto ext = adjoin(*ring, t, MonomialOrder::elimination({t}, ring->order()));
  auto tv = Polynomial::variable(ext, t);
  auto one_minus_t = Polynomial::constant(ext, 1) - tv;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(tv * g.in_ring(ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.in_ring(ext));
  auto gb = buchberger(IdealBasis(ext, std::move(gens)), budget);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements())
    if (!g.uses_variable(t)) out.push_back(g.in_ring(ring));
  return IdealBasis(ring, std::move(out));
}

IdealBasis colon(const IdealBasis& ideal, const Polynomial& g, const Budget& budget) {
  if (g.is_zero()) throw BadColon("colon by the zero polynomial");
  const RingPtr& ring = ideal.ring();
  Polynomial h = g.in_ring(ring);
  auto meet = intersect(ideal, IdealBasis(ring, {h}), budget);
  std::vector<Polynomial> out;
  for (const auto& p : meet.generators()) out.push_back(p.divide_exact(h));
  return IdealBasis(ring, std::move(out));
}

IdealBasis colon_ideal(const IdealBasis& ideal, const IdealBasis& by, const Budget& budget) {
  if (by.is_zero()) throw BadColon("colon by the zero ideal");
  std::optional<IdealBasis> acc;
  for (const auto& g : by.generators()) {
    auto c = colon(ideal, g, budget);
    acc = acc ? intersect(*acc, c, budget) : c;
  }
  return *acc;
}

bool ideal_equal(const IdealBasis& a, const IdealBasis& b, const Budget& budget) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto ga = buchberger(a, budget);
  auto gb = buchberger(b.in_ring(a.ring()), budget);
  for (const auto& g : b.generators())
    if (!ga.contains(g)) return false;
  for (const auto& g : a.generators())
    if (!gb.contains(g)) return false;
  return true;
}

int quotient_dimension(const GroebnerBasis& basis) {
  if (basis.is_unit()) return kEmptyVariety;
  std::vector<std::uint64_t> edges;
  for (const auto& lm : basis.leading_monomials()) edges.push_back(lm.support());
  const std::size_t n = basis.ring()->size();
  return static_cast<int>(n - min_hitting_set(edges, 0, 0, n + 1));
}

int quotient_dimension(const IdealBasis& ideal, const MonomialOrder& order, const Budget& budget) {
  if (ideal.is_zero()) return static_cast<int>(ideal.ring()->size());
  return quotient_dimension(buchberger(ideal, order, budget));
}

GroebnerBasis eliminate_basis(const IdealBasis& ideal, const std::vector<VariableId>& variables,
                              const RingPtr& target, const Budget& budget) {
  const Ring& r = *ideal.ring();
  auto order = MonomialOrder::elimination(variables, target->order());
  auto ext = Ring::make(r.variables(), r.field(), order);
  auto gb = buchberger(ideal.in_ring(ext), budget);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    bool free = std::none_of(variables.begin(), variables.end(),
                             [&](const VariableId& v) { return g.uses_variable(v); });
    if (free) kept.push_back(g.in_ring(target));
  }
  return GroebnerBasis(target, std::move(kept), true, gb.stats());
}

IdealBasis eliminate(const IdealBasis& ideal, const std::vector<VariableId>& variables, const RingPtr& target,
                     const Budget& budget) {
  return eliminate_basis(ideal, variables, target, budget).ideal();
}

}  // namespace resint
