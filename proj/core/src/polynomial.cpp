#include "resint/polynomial.hpp"

#include <algorithm>

#include "resint/errors.hpp"

namespace resint {

namespace {

void check_compatible(const Ring& a, const Ring& b) {
  if (a.field() != b.field())
    throw IncompatibleField(a.field().name() + " vs " + b.field().name());
  if (!a.same_universe(b)) throw IncompatibleRing("polynomials live in different variable universes");
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  if (c.field() != ring->field()) throw IncompatibleField("constant from another field");
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({c, Monomial{}});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  auto f = ring->field();
  return constant(std::move(ring), Scalar::from_int(f, c));
}

Polynomial Polynomial::variable(RingPtr ring, const VariableId& v) {
  auto m = ring->variable_monomial(v);
  auto one = Scalar::one(ring->field());
  return Polynomial(std::move(ring), std::vector<Term>{{one, m}});
}

Polynomial Polynomial::term(RingPtr ring, const Scalar& c, const Monomial& m) {
  if (c.field() != ring->field()) throw IncompatibleField("term coefficient from another field");
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Ring& r = *ring;
  for (const auto& t : terms)
    if (t.coeff.field() != r.field()) throw IncompatibleField("term coefficient from another field");
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
  return terms_.front();
}

unsigned Polynomial::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

bool Polynomial::uses_variable(const VariableId& v) const {
  auto idx = ring_->index_of(v);
  if (!idx) return false;
  for (const auto& t : terms_)
    if (t.mono.exponent(*idx) != 0) return true;
  return false;
}

Polynomial Polynomial::aligned(const Polynomial& g) const {
  if (g.ring_ == ring_) return g;
  check_compatible(*ring_, *g.ring_);
  if (g.ring_->order() == ring_->order()) return Polynomial(ring_, g.terms_);
  return g.in_ring(ring_);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

template <class Combine>
std::vector<Term> merge(const Ring& r, const std::vector<Term>& a, const std::vector<Term>& b,
                        Combine&& scaled_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Term tb;
  bool pending = false;
  while (i < a.size() && j < b.size()) {
    if (!pending) {
      tb = scaled_b(b[j]);
      pending = true;
    }
    int c = r.compare(a[i].mono, tb.mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(std::move(tb));
      pending = false;
      ++j;
    } else {
      tb.coeff += a[i].coeff;
      if (!tb.coeff.is_zero()) out.push_back(std::move(tb));
      pending = false;
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  if (pending) {
    out.push_back(std::move(tb));
    ++j;
  }
  for (; j < b.size(); ++j) out.push_back(scaled_b(b[j]));
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  Polynomial h = aligned(g);
  terms_ = merge(*ring_, terms_, h.terms_, [](const Term& t) { return t; });
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  Polynomial h = aligned(g);
  terms_ = merge(*ring_, terms_, h.terms_, [](const Term& t) { return Term{-t.coeff, t.mono}; });
  return *this;
}

Polynomial Polynomial::sub_mul_term(const Scalar& c, const Monomial& m, const Polynomial& g) const {
  if (c.is_zero()) return *this;
  Polynomial h = aligned(g);
  Scalar neg = -c;
  return Polynomial(ring_, merge(*ring_, terms_, h.terms_, [&](const Term& t) {
                      return Term{neg * t.coeff, m * t.mono};
                    }));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  Polynomial h = f.aligned(g);
  if (f.is_zero() || h.is_zero()) return Polynomial(f.ring_);
  const Polynomial& longer = f.size() >= h.size() ? f : h;
  const Polynomial& shorter = f.size() >= h.size() ? h : f;
  if (shorter.size() <= 4) {
    Polynomial acc(f.ring_);
    for (const auto& t : shorter.terms_) acc = acc.sub_mul_term(-t.coeff, t.mono, longer);
    return acc;
  }
  std::vector<Term> all;
  all.reserve(f.size() * h.size());
  for (const auto& a : f.terms_)
    for (const auto& b : h.terms_) all.push_back({a.coeff * b.coeff, a.mono * b.mono});
  return Polynomial::from_terms(f.ring_, std::move(all));
}

Polynomial& Polynomial::operator*=(const Polynomial& g) { return *this = *this * g; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.field() != ring_->field()) throw IncompatibleField("scalar from another field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::mul_term(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial out = *this;
  for (auto& t : out.terms_) {
    t.coeff *= c;
    t.mono *= m;
  }
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  Polynomial out = *this;
  out *= leading_coeff().inverse();
  return out;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->field() != ring_->field())
    throw IncompatibleField(ring_->field().name() + " vs " + target->field().name());
  if (target->same_universe(*ring_)) {
    auto terms = terms_;
    return from_terms(target, std::move(terms));
  }
  std::vector<std::size_t> slot(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto idx = target->index_of(ring_->variables()[i]);
    slot[i] = idx ? *idx : kMaxVariables;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (auto [i, e] : t.mono.entries()) {
      if (slot[i] == kMaxVariables)
        throw IncompatibleRing("variable " + ring_->variables()[i].to_string() +
                               " missing from target ring");
      m.set_exponent(slot[i], e);
    }
    out.push_back({t.coeff, m});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::substitute(const std::map<VariableId, Polynomial>& assignment,
                                  const RingPtr& target) const {
  std::vector<const Polynomial*> image(ring_->size(), nullptr);
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto it = assignment.find(ring_->variables()[i]);
    if (it != assignment.end()) {
      check_compatible(*it->second.ring(), *target);
      image[i] = &it->second;
    }
  }
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, image[var]->in_ring(target).pow(e)).first;
    return it->second;
  };
  Polynomial acc(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (auto [i, e] : t.mono.entries()) {
      if (image[i] == nullptr)
        throw BadAssignment("no value for variable " + ring_->variables()[i].to_string());
      prod *= power(i, e);
    }
    acc += prod;
  }
  return acc;
}

Polynomial Polynomial::divide_exact(const Polynomial& g) const {
  Polynomial divisor = aligned(g);
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Term& lead = divisor.leading_term();
  Scalar inv = lead.coeff.inverse();
  std::vector<Term> quotient;
  Polynomial rest = *this;
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (!lead.mono.divides(t.mono)) throw NotDivisible("remainder is nonzero");
    Term q{t.coeff * inv, lead.mono.quotient_of(t.mono)};
    rest = rest.sub_mul_term(q.coeff, q.mono, divisor);
    quotient.push_back(std::move(q));
  }
  return Polynomial(ring_, std::move(quotient));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Slots are canonical ascending, so canonical lex compares from the top slot.
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    for (std::size_t i = kMaxVariables; i-- > 0;) {
      auto ea = a->mono.exponent(i), eb = b->mono.exponent(i);
      if (ea != eb) return ea > eb;
    }
    return false;
  });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    std::string c = t->coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t->mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += ring_->monomial_string(t->mono);
    }
  }
  return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.ring_ != g.ring_) {
    if (f.ring_->field() != g.ring_->field() || !f.ring_->same_universe(*g.ring_)) return false;
    if (!(f.ring_->order() == g.ring_->order())) return f == g.in_ring(f.ring_);
  }
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (!(f.terms_[i].mono == g.terms_[i].mono) || f.terms_[i].coeff != g.terms_[i].coeff)
      return false;
  return true;
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ZeroPolynomial("leading monomial of the zero polynomial");
  auto ring = f.ring()->with_order(order);
  return f.in_ring(ring).leading_monomial();
}

}  // namespace resint
