#include "resint/ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "resint/errors.hpp"

namespace resint {

std::string VariableId::to_string() const {
  switch (kind) {
    case Kind::X:
      return "x[" + std::to_string(a) + "][" + std::to_string(b) + "]";
    case Kind::Y:
      return "y[" + std::to_string(a) + "]";
    case Kind::T:
      return a == 0 ? std::string("t") : "t[" + std::to_string(a) + "]";
    case Kind::P:
      return "Y[" + std::to_string(a) + "]";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Monomial

void Monomial::set_exponent(std::size_t var, unsigned e) {
  if (var >= kMaxVariables) throw std::out_of_range("monomial slot out of range");
  if (e > 255) throw std::overflow_error("exponent exceeds 255");
  degree_ = static_cast<std::uint16_t>(degree_ - exp_[var] + e);
  exp_[var] = static_cast<std::uint8_t>(e);
  if (e == 0)
    support_ &= ~(std::uint64_t{1} << var);
  else
    support_ |= std::uint64_t{1} << var;
}

bool Monomial::is_squarefree() const noexcept {
  for (auto e : exp_)
    if (e > 1) return false;
  return true;
}

std::vector<std::pair<std::size_t, unsigned>> Monomial::entries() const {
  std::vector<std::pair<std::size_t, unsigned>> out;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exp_[i] != 0) out.emplace_back(i, exp_[i]);
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q = other;
  for (std::size_t i = 0; i < kMaxVariables; ++i) q.exp_[i] -= exp_[i];
  q.degree_ = static_cast<std::uint16_t>(other.degree_ - degree_);
  q.support_ = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (q.exp_[i] != 0) q.support_ |= std::uint64_t{1} << i;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l;
  unsigned deg = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    l.exp_[i] = std::max(exp_[i], other.exp_[i]);
    deg += l.exp_[i];
  }
  l.degree_ = static_cast<std::uint16_t>(deg);
  l.support_ = support_ | other.support_;
  return l;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{exp_[i]} + other.exp_[i];
    if (e > 255) throw std::overflow_error("exponent exceeds 255");
    exp_[i] = static_cast<std::uint8_t>(e);
  }
  degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  support_ |= other.support_;
  return *this;
}

// ---------------------------------------------------------------------------
// MonomialOrder

namespace {

std::vector<VariableId> descending(std::vector<VariableId> vars) {
  std::sort(vars.begin(), vars.end(), std::greater<>());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

}  // namespace

MonomialOrder MonomialOrder::paper_lex(std::vector<VariableId> vars) {
  MonomialOrder o;
  o.kind_ = Kind::PaperLex;
  o.blocks_.push_back({false, descending(std::move(vars))});
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<VariableId> vars) {
  MonomialOrder o;
  o.kind_ = Kind::GrevLex;
  o.blocks_.push_back({true, descending(std::move(vars))});
  return o;
}

MonomialOrder MonomialOrder::tau(std::vector<VariableId> ascending) {
  MonomialOrder o;
  o.kind_ = Kind::Tau;
  std::reverse(ascending.begin(), ascending.end());
  o.blocks_.push_back({true, std::move(ascending)});
  return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<VariableId> eliminated,
                                         const MonomialOrder& rest) {
  MonomialOrder o;
  o.kind_ = Kind::Elimination;
  o.blocks_.push_back({true, descending(std::move(eliminated))});
  o.blocks_.insert(o.blocks_.end(), rest.blocks_.begin(), rest.blocks_.end());
  return o;
}

MonomialOrder MonomialOrder::with_smallest(const VariableId& v) const {
  MonomialOrder o = *this;
  if (o.blocks_.empty()) o.blocks_.push_back({true, {}});
  o.blocks_.back().vars.push_back(v);
  return o;
}

std::vector<VariableId> MonomialOrder::variables() const {
  std::vector<VariableId> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.vars.begin(), b.vars.end());
  return out;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::PaperLex:
      return "PaperLex";
    case Kind::GrevLex:
      return "GrevLex";
    case Kind::Tau:
      return "Tau";
    case Kind::Elimination:
      return "Elimination";
  }
  return "?";
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  if (a.kind_ != b.kind_ || a.blocks_.size() != b.blocks_.size()) return false;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i)
    if (!MonomialOrder::block_equal(a.blocks_[i], b.blocks_[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(std::vector<VariableId> vars, Field field, MonomialOrder order)
    : vars_(std::move(vars)), field_(field), order_(std::move(order)) {}

RingPtr Ring::make(std::vector<VariableId> vars, Field field, MonomialOrder order) {
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    throw std::invalid_argument("duplicate variable in ring");
  if (vars.size() > kMaxVariables)
    throw std::invalid_argument("ring has more than " + std::to_string(kMaxVariables) +
                                " variables");
  auto ordered = order.variables();
  auto sorted = ordered;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != vars) throw std::invalid_argument("monomial order does not match ring variables");

  auto ring = std::shared_ptr<Ring>(new Ring(std::move(vars), field, std::move(order)));
  for (const auto& block : ring->order_.blocks()) {
    ResolvedBlock rb{block.graded_reverse, {}};
    for (const auto& v : block.vars) rb.slots.push_back(static_cast<std::uint8_t>(ring->require_index(v)));
    ring->blocks_.push_back(std::move(rb));
  }
  return ring;
}

std::optional<std::size_t> Ring::index_of(const VariableId& v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t Ring::require_index(const VariableId& v) const {
  auto idx = index_of(v);
  if (!idx) throw IncompatibleRing("variable " + v.to_string() + " is not in the ring");
  return *idx;
}

int Ring::compare(const Monomial& a, const Monomial& b) const noexcept {
  for (const auto& block : blocks_) {
    if (block.graded_reverse) {
      unsigned da = 0, db = 0;
      if (blocks_.size() == 1) {
        da = a.degree();
        db = b.degree();
      } else {
        for (auto s : block.slots) {
          da += a.exponent(s);
          db += b.exponent(s);
        }
      }
      if (da != db) return da < db ? -1 : 1;
      for (auto it = block.slots.rbegin(); it != block.slots.rend(); ++it) {
        auto ea = a.exponent(*it), eb = b.exponent(*it);
        if (ea != eb) return ea < eb ? 1 : -1;
      }
    } else {
      for (auto s : block.slots) {
        auto ea = a.exponent(s), eb = b.exponent(s);
        if (ea != eb) return ea < eb ? -1 : 1;
      }
    }
  }
  return 0;
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(vars_, field_, std::move(order)); }

RingPtr Ring::with_field(Field field) const { return make(vars_, field, order_); }

Monomial Ring::variable_monomial(const VariableId& v, unsigned e) const {
  Monomial m;
  m.set_exponent(require_index(v), e);
  return m;
}

std::string Ring::monomial_string(const Monomial& m) const {
  // Factors grouped by kind (Y[k], x, y, t) and ascending within a kind.
  std::vector<std::size_t> slots;
  for (auto [slot, e] : m.entries()) slots.push_back(slot);
  std::stable_sort(slots.begin(), slots.end(), [this](std::size_t a, std::size_t b) {
    return vars_[a].kind > vars_[b].kind;
  });
  std::string out;
  for (auto slot : slots) {
    if (!out.empty()) out += '*';
    out += vars_[slot].to_string();
    if (unsigned e = m.exponent(slot); e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace resint
