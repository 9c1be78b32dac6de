#include "resint/asl.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "resint/generic_matrix.hpp"

namespace resint {

std::string StandardMonomial::to_string() const {
  if (labels.empty()) return "1";
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += '*';
    out += l.to_string();
  }
  return out;
}

std::string StraighteningRelation::to_string() const {
  std::string out = a.to_string() + "*" + b.to_string() + " =";
  if (right.empty()) return out + " 0";
  bool first = true;
  for (const auto& t : right) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    out += first ? (negative ? " -" : " ") : (negative ? " - " : " + ");
    if (c != "1") out += c + "*";
    out += t.monomial.to_string();
    first = false;
  }
  return out;
}

void sort_chain(const BPoset& poset, std::vector<GeneratorLabel>& labels) {
  std::sort(labels.begin(), labels.end(), [&](const GeneratorLabel& x, const GeneratorLabel& y) {
    int rx = poset.rank(x), ry = poset.rank(y);
    return rx != ry ? rx < ry : x < y;
  });
}

bool is_chain(const std::vector<GeneratorLabel>& sorted) {
  for (std::size_t k = 1; k < sorted.size(); ++k)
    if (!less_eq(sorted[k - 1], sorted[k])) return false;
  return true;
}

std::vector<StandardMonomial> enumerate_standard_monomials(const BPoset& poset, int degree) {
  std::vector<GeneratorLabel> order = poset.labels;
  sort_chain(poset, order);
  std::vector<StandardMonomial> out;
  std::vector<GeneratorLabel> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == degree) {
      out.push_back({cur});
      return;
    }
    for (std::size_t k = from; k < order.size(); ++k) {
      if (!cur.empty() && !less_eq(cur.back(), order[k])) continue;
      cur.push_back(order[k]);
      self(self, k);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Polynomial expand(const ResidualInstance& instance, const std::vector<GeneratorLabel>& labels) {
  Polynomial p = Polynomial::constant(instance.ring, 1);
  for (const auto& l : labels) p *= instance.at(l);
  return p;
}

namespace {

/// Standard monomials of one degree indexed by their leading monomials.
class StandardTable {
 public:
  StandardTable(const ResidualInstance& instance, const BPoset& poset, int degree) {
    for (auto& sm : enumerate_standard_monomials(poset, degree)) {
      Polynomial p = expand(instance, sm.labels);
      auto [it, fresh] = index_.emplace(p.leading_monomial(), entries_.size());
      if (!fresh) distinct_ = false;
      entries_.push_back({std::move(sm), std::move(p)});
    }
  }

  bool distinct() const noexcept { return distinct_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Coordinates of f in the standard basis, or false if f is outside the span.
  bool subduce(Polynomial f, std::vector<StraighteningTerm>* terms) const {
    while (!f.is_zero()) {
      auto it = index_.find(f.leading_monomial());
      if (it == index_.end()) return false;
      const auto& e = entries_[it->second];
      Scalar c = f.leading_coeff() / e.poly.leading_coeff();
      f = f.sub_mul_term(c, Monomial{}, e.poly);
      if (terms != nullptr) terms->push_back({c, e.monomial});
    }
    return true;
  }

 private:
  struct Entry {
    StandardMonomial monomial;
    Polynomial poly;
  };
  std::vector<Entry> entries_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  bool distinct_ = true;
};

StraighteningRelation straighten_q_minor(const ResidualInstance& instance, const BPoset& poset,
                                         const GeneratorLabel& q, const GeneratorLabel& mn) {
  // The bordered determinant gives sum_r sign_r Q_{row_r} [rows \ row_r] = 0,
  // whose Q_j term has sign +1.
  auto expansion = bordered_determinant(instance.m, instance.n, mn.rows, q.q);
  StraighteningRelation rel{q, mn, {}};
  const Field& f = instance.ring->field();
  for (const auto& t : expansion.terms) {
    if (t.q_row == q.q) continue;
    std::vector<GeneratorLabel> labels{GeneratorLabel::Q(t.q_row), GeneratorLabel::Minor(t.minor_rows)};
    sort_chain(poset, labels);
    rel.right.push_back({Scalar::from_int(f, -t.sign), {std::move(labels)}});
  }
  return rel;
}

StraighteningRelation straighten_with(const ResidualInstance& instance, const BPoset& poset,
                                      const StandardTable& degree2, const GeneratorLabel& a,
                                      const GeneratorLabel& b) {
  if (comparable(a, b))
    throw NotIncomparable(a.to_string() + " and " + b.to_string() + " are comparable");
  if (a.is_q()) return straighten_q_minor(instance, poset, a, b);
  if (b.is_q()) {
    auto rel = straighten_q_minor(instance, poset, b, a);
    std::swap(rel.a, rel.b);
    return rel;
  }
  StraighteningRelation rel{a, b, {}};
  if (!degree2.subduce(instance.at(a) * instance.at(b), &rel.right))
    throw StructureViolation("product " + a.to_string() + "*" + b.to_string() +
                             " is outside the span of standard monomials");
  return rel;
}

}  // namespace

Asl1Report verify_asl1(const ResidualInstance& instance, int degree_bound) {
  const BPoset poset = make_b_poset(instance.m, instance.n);
  Asl1Report report;
  report.degree_bound = degree_bound;
  for (int d = 0; d <= degree_bound; ++d) {
    StandardTable table(instance, poset, d);
    report.standard_monomials += table.size();
    report.distinct_leading = report.distinct_leading && table.distinct();

    // Every multiset of d generators.
    std::vector<GeneratorLabel> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (static_cast<int>(cur.size()) == d) {
        ++report.products_checked;
        if (!table.subduce(expand(instance, cur), nullptr)) report.spanning = false;
        return;
      }
      for (std::size_t k = from; k < instance.labels.size(); ++k) {
        cur.push_back(instance.labels[k]);
        self(self, k);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  return report;
}

StraighteningRelation straighten(const ResidualInstance& instance, const GeneratorLabel& a,
                                 const GeneratorLabel& b) {
  const BPoset poset = make_b_poset(instance.m, instance.n);
  if (comparable(a, b))
    throw NotIncomparable(a.to_string() + " and " + b.to_string() + " are comparable");
  if (a.is_q() || b.is_q()) {
    StandardTable empty(instance, poset, 0);
    return straighten_with(instance, poset, empty, a, b);
  }
  return straighten_with(instance, poset, StandardTable(instance, poset, 2), a, b);
}

bool check_relation(const ResidualInstance& instance, const BPoset& poset, const StraighteningRelation& rel) {
  Polynomial diff = instance.at(rel.a) * instance.at(rel.b);
  for (const auto& t : rel.right) {
    auto sorted = t.monomial.labels;
    sort_chain(poset, sorted);
    if (sorted.empty() || sorted != t.monomial.labels || !is_chain(sorted)) return false;
    const auto& least = t.monomial.labels.front();
    bool below_a = less_eq(least, rel.a) && least != rel.a;
    bool below_b = less_eq(least, rel.b) && least != rel.b;
    if (!below_a || !below_b) return false;
    diff -= expand(instance, t.monomial.labels) * t.coeff;
  }
  return diff.is_zero();
}

Asl2Report verify_asl2(const ResidualInstance& instance, const Asl2Options& options) {
  const BPoset poset = make_b_poset(instance.m, instance.n);
  const StandardTable degree2(instance, poset, 2);
  std::vector<std::pair<GeneratorLabel, GeneratorLabel>> pairs;
  for (std::size_t i = 0; i < instance.labels.size(); ++i)
    for (std::size_t j = i + 1; j < instance.labels.size(); ++j)
      if (!comparable(instance.labels[i], instance.labels[j]))
        pairs.emplace_back(instance.labels[i], instance.labels[j]);

  Asl2Report report;
  report.incomparable_pairs = pairs.size();
  if (options.sample != 0 && options.sample < pairs.size()) {
    std::mt19937_64 rng(options.seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(options.sample);
    std::sort(pairs.begin(), pairs.end());
  }
  for (const auto& [a, b] : pairs) {
    ++report.checked;
    try {
      auto rel = straighten_with(instance, poset, degree2, a, b);
      if (!check_relation(instance, poset, rel)) ++report.failures;
      report.relations.push_back(std::move(rel));
    } catch (const StructureViolation&) {
      ++report.failures;
    }
  }
  return report;
}

}  // namespace resint
