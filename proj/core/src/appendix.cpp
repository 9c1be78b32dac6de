#include "resint/appendix.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "resint/generic_matrix.hpp"
#include "resint/sagbi.hpp"

namespace resint {

namespace {

void check_shape(int m, int n) {
  if (n < 1 || m < n) throw BadShape("need m >= n >= 1, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
}

std::string rows_text(const std::vector<int>& rows) { return GeneratorLabel::Minor(rows).to_string(); }

bool strictly_increasing_in(const std::vector<int>& v, int m) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 1 || v[k] > m) return false;
    if (k > 0 && v[k] <= v[k - 1]) return false;
  }
  return true;
}

std::vector<int> first_rows(int n) {
  std::vector<int> r(n);
  for (int k = 0; k < n; ++k) r[k] = k + 1;
  return r;
}

}  // namespace

SpecialMatrixPair special_matrices(int m, int n) {
  check_shape(m, n);
  SpecialMatrixPair s{m, n, generic_ring(m, n), {}};
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      bool zero = j != 1 && j != i && i <= n;
      s.assignment.emplace(VariableId::X(i, j), zero ? Polynomial(s.ring) : Polynomial::variable(s.ring, VariableId::X(i, j)));
    }
  for (int j = 1; j <= n; ++j) s.assignment.emplace(VariableId::Y(j), Polynomial::constant(s.ring, j == 1 ? 1 : 0));
  return s;
}

GeneratorLabel m_label(int n, int i, int j) {
  std::vector<int> rows;
  for (int k = 1; k <= n; ++k)
    if (k != j) rows.push_back(k);
  rows.push_back(i);
  return GeneratorLabel::Minor(std::move(rows));
}

bool TransBasisD::contains(const GeneratorLabel& label) const {
  return std::any_of(elements.begin(), elements.end(), [&](const DElement& e) { return e.label == label; });
}

std::vector<GeneratorLabel> TransBasisD::labels() const {
  std::vector<GeneratorLabel> out;
  for (const auto& e : elements) out.push_back(e.label);
  return out;
}

TransBasisD build_D(int m, int n) {
  check_shape(m, n);
  TransBasisD d{m, n, {}};
  for (int i = n + 1; i <= m; ++i)
    for (int j = 2; j <= n; ++j)
      d.elements.push_back({"M[" + std::to_string(i) + "," + std::to_string(j) + "]", m_label(n, i, j)});
  d.elements.push_back({"M[" + std::to_string(n) + "," + std::to_string(n) + "]", GeneratorLabel::Minor(first_rows(n))});
  for (int i = 1; i <= m; ++i) d.elements.push_back({"Q" + std::to_string(i), GeneratorLabel::Q(i)});
  return d;
}

std::vector<SpecializedElement> specialize_D(int m, int n) {
  auto spec = special_matrices(m, n);
  const auto& ring = spec.ring;
  auto x = [&](int i, int j) { return Polynomial::variable(ring, VariableId::X(i, j)); };
  std::vector<SpecializedElement> out;
  for (const auto& e : build_D(m, n).elements) {
    Polynomial generic = e.label.is_q() ? q_entry(ring, m, n, e.label.q) : minor(ring, m, n, e.label.rows);
    Polynomial closed = Polynomial::constant(ring, 1);
    if (e.label.is_q()) {
      closed = x(e.label.q, 1);
    } else if (e.label.rows == first_rows(n)) {
      for (int k = 1; k <= n; ++k) closed *= x(k, k);
    } else {
      const int i = e.label.rows.back();
      int j = 1;
      while (std::find(e.label.rows.begin(), e.label.rows.end(), j) != e.label.rows.end()) ++j;
      closed = x(i, j);
      for (int k = 1; k <= n; ++k)
        if (k != j) closed *= x(k, k);
      if ((n + j) % 2 != 0) closed = -closed;
    }
    Polynomial sub = spec.apply(generic);
    bool matches = sub == closed;
    out.push_back({e, std::move(sub), std::move(closed), matches});
  }
  return out;
}

IndependenceReport independence_by_exponents(int m, int n) {
  auto specialized = specialize_D(m, n);
  IndependenceReport r;
  r.elements = specialized.size();
  std::vector<Monomial> rows;
  for (const auto& s : specialized) {
    const auto& p = s.substituted;
    if (p.size() != 1 || !(p.leading_coeff().is_one() || (-p.leading_coeff()).is_one()))
      throw StructureViolation(s.element.name + " specializes to " + p.to_string() + ", not a signed monomial");
    rows.push_back(p.leading_monomial());
  }
  const auto& ring = specialized.front().substituted.ring();
  r.variables = ring->size();
  r.rank = exponent_rank(rows, ring->size());
  std::unordered_set<Monomial, MonomialHash> distinct(rows.begin(), rows.end());
  r.supports_distinct = distinct.size() == rows.size();
  return r;
}

int jacobian_rank(int m, int n, std::uint64_t seed) {
  auto ring = generic_ring(m, n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 1000);
  std::vector<mpq_class> point(ring->size());
  for (auto& v : point) v = dist(rng);

  std::vector<std::vector<mpq_class>> jac;
  for (const auto& e : build_D(m, n).elements) {
    Polynomial f = e.label.is_q() ? q_entry(ring, m, n, e.label.q) : minor(ring, m, n, e.label.rows);
    std::vector<mpq_class> row(ring->size());
    for (const auto& t : f.terms()) {
      auto entries = t.mono.entries();
      for (auto [slot, e0] : entries) {
        mpq_class v = t.coeff.rational() * e0;
        for (auto [s2, e2] : entries)
          for (unsigned k = 0; k < (s2 == slot ? e2 - 1 : e2); ++k) v *= point[s2];
        row[slot] += v;
      }
    }
    jac.push_back(std::move(row));
  }
  int rank = 0;
  const std::size_t cols = ring->size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(jac.size()); ++c) {
    std::size_t piv = rank;
    while (piv < jac.size() && jac[piv][c] == 0) ++piv;
    if (piv == jac.size()) continue;
    std::swap(jac[piv], jac[rank]);
    for (std::size_t r = rank + 1; r < jac.size(); ++r) {
      if (jac[r][c] == 0) continue;
      mpq_class f = jac[r][c] / jac[rank][c];
      for (std::size_t k = c; k < cols; ++k) jac[r][k] -= f * jac[rank][k];
    }
    ++rank;
  }
  return rank;
}

Polynomial PlueckerRelation::expand(const RingPtr& ring) const {
  Polynomial sum(ring);
  for (const auto& t : terms) {
    if (t.vanishes) continue;
    Polynomial p = minor(ring, m, n, t.left) * minor(ring, m, n, t.right);
    if (t.sign > 0)
      sum += p;
    else
      sum -= p;
  }
  return sum;
}

std::string PlueckerRelation::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    if (t.vanishes) continue;
    if (out.empty())
      out = t.sign < 0 ? "-" : "";
    else
      out += t.sign < 0 ? " - " : " + ";
    out += rows_text(t.left) + "*" + rows_text(t.right);
  }
  return (out.empty() ? "0" : out) + " = 0";
}

PlueckerRelation plucker_relation(int m, int n, const std::vector<int>& alpha, const std::vector<int>& beta) {
  check_shape(m, n);
  if (static_cast<int>(alpha.size()) != n - 1 || static_cast<int>(beta.size()) != n + 1)
    throw BadPluecker("need |alpha| = n-1 and |beta| = n+1");
  if (!strictly_increasing_in(alpha, m) || !strictly_increasing_in(beta, m))
    throw BadPluecker("index tuples must be strictly increasing within 1.." + std::to_string(m));
  PlueckerRelation rel{m, n, alpha, beta, {}};
  for (std::size_t p = 0; p < beta.size(); ++p) {
    PlueckerTerm t;
    t.exchanged = beta[p];
    for (std::size_t q = 0; q < beta.size(); ++q)
      if (q != p) t.right.push_back(beta[q]);
    t.vanishes = std::binary_search(alpha.begin(), alpha.end(), beta[p]);
    // [alpha, s] with s appended last; sorting moves s past the larger entries.
    auto larger = std::count_if(alpha.begin(), alpha.end(), [&](int a) { return a > beta[p]; });
    t.sign = ((p + static_cast<std::size_t>(larger)) % 2 == 0) ? 1 : -1;
    if (!t.vanishes) {
      t.left = alpha;
      t.left.insert(std::upper_bound(t.left.begin(), t.left.end(), beta[p]), beta[p]);
    }
    rel.terms.push_back(std::move(t));
  }
  return rel;
}

PlueckerRelation appendix_plucker(int m, int n, const std::vector<int>& rows) {
  check_shape(m, n);
  if (static_cast<int>(rows.size()) != n || !strictly_increasing_in(rows, m) || rows.front() != 1)
    throw BadPluecker(rows_text(rows) + " is not a row-1 minor");
  auto beyond = std::count_if(rows.begin(), rows.end(), [&](int r) { return r > n; });
  if (beyond < 2) throw BadPluecker(rows_text(rows) + " has fewer than two rows beyond " + std::to_string(n));
  std::vector<int> alpha(rows.begin(), rows.end() - 1);
  std::vector<int> beta = first_rows(n);
  beta.push_back(rows.back());
  return plucker_relation(m, n, alpha, beta);
}

ExprPtr Expr::leaf(GeneratorLabel l) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Leaf;
  e->label = std::move(l);
  return e;
}

ExprPtr Expr::sum(std::vector<std::pair<long, ExprPtr>> terms) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Sum;
  e->terms = std::move(terms);
  return e;
}

ExprPtr Expr::product(std::vector<ExprPtr> factors) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Product;
  e->factors = std::move(factors);
  return e;
}

ExprPtr Expr::quotient(ExprPtr numerator, std::vector<GeneratorLabel> denominator) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Quotient;
  e->factors = {std::move(numerator)};
  e->denominator = std::move(denominator);
  return e;
}

std::string Expr::to_prefix() const {
  switch (kind) {
    case Kind::Leaf:
      return label.to_string();
    case Kind::Product: {
      std::string s = "(*";
      for (const auto& f : factors) s += " " + f->to_prefix();
      return s + ")";
    }
    case Kind::Sum: {
      std::string s = "(+";
      for (const auto& [c, t] : terms) {
        if (c == 1) {
          s += " " + t->to_prefix();
        } else if (t->kind == Kind::Product) {
          s += " (* " + std::to_string(c);
          for (const auto& f : t->factors) s += " " + f->to_prefix();
          s += ")";
        } else {
          s += " (* " + std::to_string(c) + " " + t->to_prefix() + ")";
        }
      }
      return s + ")";
    }
    case Kind::Quotient: {
      std::string s = "(/ " + factors[0]->to_prefix();
      for (const auto& d : denominator) s += " " + d.to_string();
      return s + ")";
    }
  }
  return {};
}

std::size_t Expr::node_count() const {
  std::size_t k = 1;
  for (const auto& [c, t] : terms) k += t->node_count();
  for (const auto& f : factors) k += f->node_count();
  return k;
}

std::vector<GeneratorLabel> Expr::leaves() const {
  std::set<GeneratorLabel> out;
  auto rec = [&](auto&& self, const Expr& e) -> void {
    if (e.kind == Kind::Leaf) out.insert(e.label);
    for (const auto& [c, t] : e.terms) self(self, *t);
    for (const auto& f : e.factors) self(self, *f);
    for (const auto& d : e.denominator) out.insert(d);
  };
  rec(rec, *this);
  return {out.begin(), out.end()};
}

namespace {

struct Fraction {
  Polynomial num;
  std::map<GeneratorLabel, int> den;
};

/// Builds expressions with memoization and evaluates them as fractions
/// whose denominators stay factored over D.
class Rewriter {
 public:
  Rewriter(int m, int n, const Budget& budget)
      : m_(m), n_(n), d_(build_D(m, n)), ring_(generic_ring(m, n)), budget_(budget),
        start_(std::chrono::steady_clock::now()) {}

  const RingPtr& ring() const { return ring_; }

  const Polynomial& poly(const GeneratorLabel& l) {
    auto it = polys_.find(l);
    if (it != polys_.end()) return it->second;
    Polynomial p = l.is_q() ? q_entry(ring_, m_, n_, l.q) : minor(ring_, m_, n_, l.rows);
    return polys_.emplace(l, std::move(p)).first->second;
  }

  int phase(const GeneratorLabel& l) const {
    if (d_.contains(l)) return 0;
    return l.rows.front() == 1 ? 1 : 2;
  }

  ExprPtr expr(const GeneratorLabel& l) {
    auto it = exprs_.find(l);
    if (it != exprs_.end()) return it->second;
    ExprPtr e;
    switch (phase(l)) {
      case 0:
        e = Expr::leaf(l);
        break;
      case 1:
        e = exchange(l);
        break;
      default:
        e = bordered(l);
        break;
    }
    exprs_.emplace(l, e);
    return e;
  }

  Fraction eval(const ExprPtr& e) {
    auto it = values_.find(e.get());
    if (it != values_.end()) return it->second;
    Fraction out{Polynomial(ring_), {}};
    switch (e->kind) {
      case Expr::Kind::Leaf:
        out.num = poly(e->label);
        break;
      case Expr::Kind::Product:
        out.num = Polynomial::constant(ring_, 1);
        for (const auto& f : e->factors) {
          Fraction v = eval(f);
          out.num *= v.num;
          for (auto [l, k] : v.den) out.den[l] += k;
          guard(out.num);
        }
        break;
      case Expr::Kind::Sum: {
        std::vector<Fraction> parts;
        for (const auto& [c, t] : e->terms) parts.push_back(eval(t));
        for (const auto& p : parts)
          for (auto [l, k] : p.den) out.den[l] = std::max(out.den[l], k);
        for (std::size_t i = 0; i < parts.size(); ++i) {
          Polynomial term = parts[i].num * Scalar::from_int(ring_->field(), e->terms[i].first);
          for (auto [l, k] : out.den) {
            auto have = parts[i].den.count(l) ? parts[i].den.at(l) : 0;
            for (int r = have; r < k; ++r) term *= poly(l);
          }
          out.num += term;
          guard(out.num);
        }
        break;
      }
      case Expr::Kind::Quotient:
        out = eval(e->factors[0]);
        for (const auto& l : e->denominator) ++out.den[l];
        break;
    }
    values_.emplace(e.get(), out);
    return out;
  }

  Rewrite rewrite(const GeneratorLabel& l) {
    ExprPtr e = expr(l);
    Fraction f = eval(e);
    Polynomial lhs = poly(l);
    std::vector<std::pair<GeneratorLabel, int>> den;
    for (auto [d, k] : f.den) {
      if (k == 0) continue;
      den.emplace_back(d, k);
      for (int r = 0; r < k; ++r) lhs *= poly(d);
    }
    bool ok = lhs == f.num;
    return Rewrite{l, e, std::move(den), std::move(f.num), std::move(lhs), ok, phase(l)};
  }

 private:
  // target * c_t * M[n,n] = -(sum of the other exchange terms).
  ExprPtr exchange(const GeneratorLabel& l) {
    auto rel = appendix_plucker(m_, n_, l.rows);
    const int last = l.rows.back();
    long ct = 0;
    std::vector<std::pair<long, ExprPtr>> terms;
    for (const auto& t : rel.terms) {
      if (t.vanishes) continue;
      if (t.exchanged == last) {
        ct = t.sign;
        continue;
      }
      terms.emplace_back(-static_cast<long>(t.sign),
                         Expr::product({expr(GeneratorLabel::Minor(t.left)), expr(GeneratorLabel::Minor(t.right))}));
    }
    if (ct == 0) throw StructureViolation("exchange for " + l.to_string() + " lost its target term");
    for (auto& [c, t] : terms) c *= ct;
    return Expr::quotient(Expr::sum(std::move(terms)), {GeneratorLabel::Minor(first_rows(n_))});
  }

  // Last-column expansion of the singular matrix on rows {1} + rows.
  ExprPtr bordered(const GeneratorLabel& l) {
    std::vector<int> all{1};
    all.insert(all.end(), l.rows.begin(), l.rows.end());
    auto exp = last_column_expansion(m_, n_, all);
    long s1 = 0;
    std::vector<std::pair<long, ExprPtr>> terms;
    for (const auto& t : exp.terms) {
      if (t.q_row == 1) {
        s1 = t.sign;
        continue;
      }
      terms.emplace_back(-static_cast<long>(t.sign),
                         Expr::product({expr(GeneratorLabel::Minor(t.minor_rows)), Expr::leaf(GeneratorLabel::Q(t.q_row))}));
    }
    if (s1 == 0) throw StructureViolation("expansion for " + l.to_string() + " has no Q1 term");
    for (auto& [c, t] : terms) c *= s1;
    return Expr::quotient(Expr::sum(std::move(terms)), {GeneratorLabel::Q(1)});
  }

  void guard(const Polynomial& p) {
    stats_.max_terms = std::max(stats_.max_terms, p.size());
    if (p.size() > budget_.max_terms) throw BudgetExceeded("rewrite numerator exceeds term budget", stats_);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    stats_.wall_seconds = secs;
    if (secs > budget_.wall_seconds) throw BudgetExceeded("rewrite exceeds wall-clock budget", stats_);
  }

  int m_, n_;
  TransBasisD d_;
  RingPtr ring_;
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  RunStats stats_;
  std::map<GeneratorLabel, Polynomial> polys_;
  std::map<GeneratorLabel, ExprPtr> exprs_;
  std::unordered_map<const Expr*, Fraction> values_;
};

}  // namespace

Rewrite rewrite_in_D(const GeneratorLabel& label, int m, int n, const Budget& budget) {
  check_shape(m, n);
  auto all = all_labels(m, n);
  if (std::find(all.begin(), all.end(), label) == all.end())
    throw BadIndex(label.to_string() + " is not an element of B for (" + std::to_string(m) + "," + std::to_string(n) + ")");
  Rewriter rw(m, n, budget);
  return rw.rewrite(label);
}

TransCertificate verify_transcendence_basis(int m, int n, const Budget& budget) {
  TransCertificate c;
  c.m = m;
  c.n = n;
  c.d = build_D(m, n);
  c.specialized = specialize_D(m, n);
  c.closed_forms_match = std::all_of(c.specialized.begin(), c.specialized.end(),
                                     [](const SpecializedElement& s) { return s.matches; });
  c.independence = independence_by_exponents(m, n);
  Rewriter rw(m, n, budget);
  c.all_rewrites_verified = true;
  for (const auto& l : all_labels(m, n)) {
    c.rewrites.push_back(rw.rewrite(l));
    c.all_rewrites_verified = c.all_rewrites_verified && c.rewrites.back().verified;
  }
  c.dimension = static_cast<int>(c.d.size());
  c.size_matches = c.dimension == n * (m - n + 1) + 1;
  return c;
}

}  // namespace resint
