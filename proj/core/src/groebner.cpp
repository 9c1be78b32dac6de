#include "resint/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>

#include "resint/hash.hpp"

namespace resint {

// ---------------------------------------------------------------------------
// IdealBasis

IdealBasis::IdealBasis(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    Polynomial h = g.ring() == ring_ ? g.monic() : g.in_ring(ring_).monic();
    bool seen = false;
    for (const auto& existing : generators_)
      if (existing.monic() == h) {
        seen = true;
        break;
      }
    if (!seen) generators_.push_back(g.ring() == ring_ ? std::move(g) : g.in_ring(ring_));
  }
}

IdealBasis::IdealBasis(std::vector<Polynomial> generators)
    : IdealBasis(generators.empty() ? throw std::invalid_argument("IdealBasis needs a ring or a generator")
                                    : generators.front().ring(),
                 std::move(generators)) {}

IdealBasis IdealBasis::in_ring(const RingPtr& target) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(g.in_ring(target));
  return IdealBasis(target, std::move(gens));
}

std::string IdealBasis::hash() const {
  std::vector<std::string> lines;
  for (const auto& g : generators_) lines.push_back(g.to_string());
  std::sort(lines.begin(), lines.end());
  std::string joined = ring_->field().name() + "\n";
  for (const auto& l : lines) joined += l + "\n";
  return sha256_hex(joined);
}

// ---------------------------------------------------------------------------
// Reduction kernel

namespace {

using Clock = std::chrono::steady_clock;

struct Element {
  Polynomial poly;
  Monomial lm;
  unsigned sugar;
  bool active = true;
};

class Engine {
 public:
  Engine(RingPtr ring, const Budget& budget)
      : ring_(std::move(ring)), budget_(budget), start_(Clock::now()) {}

  RunStats& stats() { return stats_; }

  void check_clock() {
    stats_.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    if (stats_.wall_seconds > budget_.wall_seconds) fail("wall-clock budget exhausted");
  }

  [[noreturn]] void fail(const std::string& why) {
    stats_.basis_size = basis_.size();
    stats_.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    throw BudgetExceeded(why, stats_);
  }

  void note_terms(std::size_t n) {
    stats_.max_terms = std::max(stats_.max_terms, n);
    if (n > budget_.max_terms) fail("intermediate polynomial exceeds term budget");
  }

  const Element* find_reducer(const Monomial& m) const {
    for (const auto& e : basis_)
      if (e.active && e.lm.divides(m)) return &e;
    return nullptr;
  }

  /// Full (top + tail) reduction of `p` by the active basis; result is monic or zero.
  std::vector<Term> reduce(std::vector<Term> cur) {
    const Ring& r = *ring_;
    std::vector<Term> done;
    std::size_t head = 0;
    std::size_t steps = 0;
    while (head < cur.size()) {
      const Element* red = find_reducer(cur[head].mono);
      if (red == nullptr) {
        done.push_back(std::move(cur[head]));
        ++head;
        continue;
      }
      if (++steps % 512 == 0) check_clock();
      const Scalar neg = -cur[head].coeff;
      const Monomial shift = red->lm.quotient_of(cur[head].mono);
      const auto& g = red->poly.terms();
      std::vector<Term> next;
      next.reserve(cur.size() - head + g.size());
      std::size_t i = head + 1, j = 1;
      while (i < cur.size() && j < g.size()) {
        Monomial gm = shift * g[j].mono;
        int c = r.compare(cur[i].mono, gm);
        if (c > 0) {
          next.push_back(std::move(cur[i++]));
        } else if (c < 0) {
          next.push_back({neg * g[j].coeff, gm});
          ++j;
        } else {
          Scalar s = cur[i].coeff + neg * g[j].coeff;
          if (!s.is_zero()) next.push_back({std::move(s), gm});
          ++i;
          ++j;
        }
      }
      for (; i < cur.size(); ++i) next.push_back(std::move(cur[i]));
      for (; j < g.size(); ++j) next.push_back({neg * g[j].coeff, shift * g[j].mono});
      note_terms(next.size() + done.size());
      cur = std::move(next);
      head = 0;
    }
    if (!done.empty() && !done.front().coeff.is_one()) {
      Scalar inv = done.front().coeff.inverse();
      for (auto& t : done) t.coeff *= inv;
    }
    return done;
  }

  // -------------------------------------------------------------------------
  // Buchberger with the Gebauer–Möller installation of new elements.

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
  };

  struct PairOrder {
    const Ring* ring;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (int c = ring->compare(a.lcm, b.lcm); c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  /// Adds an element known to be part of a Gröbner basis together with the
  /// current elements; no pairs are formed with earlier seeds.
  void add_seed(Polynomial p) {
    Monomial lm = p.leading_monomial();
    unsigned sugar = p.total_degree();
    basis_.push_back({std::move(p), lm, sugar, true});
  }

  void install(Polynomial h) {
    const std::size_t hi = basis_.size();
    Monomial lh = h.leading_monomial();
    unsigned sugar_h = h.total_degree();
    basis_.push_back({std::move(h), lh, sugar_h, true});

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!basis_[g].active) continue;
      Monomial l = lh.lcm(basis_[g].lm);
      unsigned s = std::max(sugar_h + (l.degree() - lh.degree()),
                            basis_[g].sugar + (l.degree() - basis_[g].lm.degree()));
      candidates.push_back({g, hi, l, s});
    }

    // Chain criterion among the new pairs; coprime pairs are kept for now so
    // that they can still eliminate others.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool coprime = lh.coprime(basis_[p.i].lm);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b)
          dominated = candidates[b].lcm.divides(p.lcm);
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) dominated = kept[b].lcm.divides(p.lcm);
      }
      if (coprime || !dominated) kept.push_back(p);
      else ++stats_.pairs_discarded;
    }

    // Existing pairs made redundant by h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (lh.divides(p.lcm) && lh.lcm(basis_[p.i].lm) != p.lcm && lh.lcm(basis_[p.j].lm) != p.lcm) {
        it = pairs_.erase(it);
        ++stats_.pairs_discarded;
      } else {
        ++it;
      }
    }

    // Product criterion.
    for (auto& p : kept) {
      if (lh.coprime(basis_[p.i].lm)) {
        ++stats_.pairs_discarded;
        continue;
      }
      pairs_.insert(p);
    }

    for (std::size_t g = 0; g < hi; ++g)
      if (basis_[g].active && lh.divides(basis_[g].lm)) basis_[g].active = false;
  }

  /// Returns false if the ideal turned out to be the unit ideal.
  bool run() {
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++stats_.pairs_processed > budget_.max_pairs) fail("pair budget exhausted");
      check_clock();

      const Element& a = basis_[p.i];
      const Element& b = basis_[p.j];
      Polynomial s = a.poly.mul_term(Scalar::one(ring_->field()), a.lm.quotient_of(p.lcm));
      s = s.sub_mul_term(Scalar::one(ring_->field()), b.lm.quotient_of(p.lcm), b.poly);
      auto reduced = reduce(std::vector<Term>(s.terms()));
      if (reduced.empty()) continue;
      Polynomial h = Polynomial::from_terms(ring_, std::move(reduced));
      if (h.is_constant()) return false;
      unsigned sugar = std::max(p.sugar, h.total_degree());
      install(std::move(h));
      basis_.back().sugar = sugar;
    }
    return true;
  }

  bool absorb(const Polynomial& f) {
    auto reduced = reduce(std::vector<Term>(f.terms()));
    if (reduced.empty()) return true;
    Polynomial h = Polynomial::from_terms(ring_, std::move(reduced));
    if (h.is_constant()) return false;
    install(std::move(h));
    return true;
  }

  std::vector<Polynomial> reduced_basis() {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!basis_[i].active) continue;
      bool redundant = false;
      for (std::size_t j : keep)
        if (basis_[j].lm.divides(basis_[i].lm)) redundant = true;
      if (!redundant) keep.push_back(i);
    }
    for (auto& e : basis_) e.active = false;
    for (auto i : keep) basis_[i].active = true;

    // Leading terms of a minimal basis are irreducible by the others, so a
    // full reduction with the element switched off only touches its tail.
    std::vector<Polynomial> out;
    for (auto i : keep) {
      basis_[i].active = false;
      auto terms = reduce(std::vector<Term>(basis_[i].poly.terms()));
      basis_[i].active = true;
      out.push_back(Polynomial::from_terms(ring_, std::move(terms)));
    }
    std::sort(out.begin(), out.end(), [this](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
  }

 private:
  RingPtr ring_;
  Budget budget_;
  Clock::time_point start_;
  RunStats stats_;
  std::vector<Element> basis_;
  std::set<Pair, PairOrder> pairs_{PairOrder{ring_.get()}};
};

GroebnerBasis unit_basis(const RingPtr& ring, RunStats stats) {
  return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, true, stats);
}

GroebnerBasis finish(Engine& engine, const RingPtr& ring, bool proper) {
  if (!proper) return unit_basis(ring, engine.stats());
  auto elems = engine.reduced_basis();
  engine.check_clock();
  engine.stats().basis_size = elems.size();
  return GroebnerBasis(ring, std::move(elems), true, engine.stats());
}

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool reduced, RunStats stats)
    : ring_(std::move(ring)), elements_(std::move(elements)), reduced_(reduced), stats_(stats) {}

bool GroebnerBasis::is_unit() const noexcept {
  return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  Polynomial rest = f.ring() == ring_ ? f : f.in_ring(ring_);
  std::vector<Term> out;
  while (!rest.is_zero()) {
    const Term lt = rest.leading_term();
    const Polynomial* red = nullptr;
    for (const auto& g : elements_)
      if (g.leading_monomial().divides(lt.mono)) {
        red = &g;
        break;
      }
    if (red == nullptr) {
      out.push_back(lt);
      rest = rest - Polynomial::term(ring_, lt.coeff, lt.mono);
      continue;
    }
    Scalar c = lt.coeff / red->leading_coeff();
    rest = rest.sub_mul_term(c, red->leading_monomial().quotient_of(lt.mono), *red);
  }
  return Polynomial::from_terms(ring_, std::move(out));
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

std::string GroebnerBasis::to_string() const {
  std::string out;
  for (const auto& g : elements_) out += g.to_string() + "\n";
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) { return basis.normal_form(f); }

// ---------------------------------------------------------------------------
// Entry points

GroebnerBasis buchberger(const IdealBasis& ideal, const Budget& budget) {
  const RingPtr& ring = ideal.ring();
  Engine engine(ring, budget);
  std::vector<Polynomial> gens = ideal.generators();
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  bool proper = true;
  for (const auto& g : gens) {
    if (!engine.absorb(g)) {
      proper = false;
      break;
    }
  }
  if (proper) proper = engine.run();
  return finish(engine, ring, proper);
}

GroebnerBasis buchberger(const IdealBasis& ideal, const MonomialOrder& order, const Budget& budget) {
  auto ring = ideal.ring()->with_order(order);
  return buchberger(ideal.in_ring(ring), budget);
}

GroebnerBasis extend_basis(const GroebnerBasis& known, const std::vector<Polynomial>& extra,
                           const Budget& budget) {
  if (extra.empty()) return known;
  const RingPtr& ring = extra.front().ring();
  if (known.is_unit()) return unit_basis(ring, {});
  Engine engine(ring, budget);
  for (const auto& g : known.elements()) engine.add_seed(g.in_ring(ring).monic());
  bool proper = true;
  for (const auto& f : extra) {
    if (!engine.absorb(f.ring() == ring ? f : f.in_ring(ring))) {
      proper = false;
      break;
    }
  }
  if (proper) proper = engine.run();
  return finish(engine, ring, proper);
}

}  // namespace resint
