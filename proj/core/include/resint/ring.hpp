#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resint/scalar.hpp"

namespace resint {

/// A named indeterminate. X(i,j) and Y(i) are the generic matrix entries,
/// T(k) are auxiliary slack variables and P(k) presentation variables
/// (printed as Y[k]) indexed by canonical generator position.
struct VariableId {
  enum class Kind : std::uint8_t { T = 0, Y = 1, X = 2, P = 3 };

  Kind kind = Kind::X;
  int a = 0;
  int b = 0;

  static VariableId X(int row, int col) { return {Kind::X, row, col}; }
  static VariableId Y(int index) { return {Kind::Y, index, 0}; }
  static VariableId T(int index = 0) { return {Kind::T, index, 0}; }
  static VariableId P(int index) { return {Kind::P, index, 0}; }

  std::string to_string() const;

  /// The canonical sequence t < y[1] < ... < y[n] < x[1][1] < x[1][2] < ... < Y[1] < ...
  friend auto operator<=>(const VariableId&, const VariableId&) = default;
};

inline constexpr std::size_t kMaxVariables = 64;

/// Dense exponent vector over a ring's variable slots.
class Monomial {
 public:
  Monomial() = default;

  std::uint8_t exponent(std::size_t var) const { return exp_[var]; }
  void set_exponent(std::size_t var, unsigned e);
  unsigned degree() const noexcept { return degree_; }
  std::uint64_t support() const noexcept { return support_; }
  bool is_one() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;
  /// Nonzero (slot, exponent) pairs in slot order.
  std::vector<std::pair<std::size_t, unsigned>> entries() const;

  bool divides(const Monomial& other) const noexcept;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept { return (support_ & other.support_) == 0; }

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.support_ == b.support_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(exp_.data()), exp_.size()));
  }

 private:
  std::array<std::uint8_t, kMaxVariables> exp_{};
  std::uint16_t degree_ = 0;
  std::uint64_t support_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// A monomial order described as a sequence of blocks; blocks are compared in
/// turn, earlier blocks dominating. Within a block variables are listed from
/// largest to smallest.
class MonomialOrder {
 public:
  enum class Kind { PaperLex, GrevLex, Tau, Elimination };

  struct Block {
    bool graded_reverse = false;  // false: pure lex
    std::vector<VariableId> vars;
  };

  /// Lex with y[1] < ... < y[n] < x[1][1] < ... < x[m][n], comparing from the
  /// largest variable down; any auxiliary t sits below everything.
  static MonomialOrder paper_lex(std::vector<VariableId> vars);
  /// Graded reverse lex on the canonical variable sequence.
  static MonomialOrder grevlex(std::vector<VariableId> vars);
  /// Graded reverse lex on presentation variables listed smallest first.
  static MonomialOrder tau(std::vector<VariableId> ascending);
  /// Block order eliminating `eliminated`, followed by `rest`.
  static MonomialOrder elimination(std::vector<VariableId> eliminated, const MonomialOrder& rest);

  /// Same order with `v` adjoined as the new smallest variable of the last
  /// block. Restricted to monomials free of `v` it agrees with *this.
  MonomialOrder with_smallest(const VariableId& v) const;

  Kind kind() const noexcept { return kind_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::vector<VariableId> variables() const;
  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  static bool block_equal(const Block& a, const Block& b) {
    return a.graded_reverse == b.graded_reverse && a.vars == b.vars;
  }

  Kind kind_ = Kind::GrevLex;
  std::vector<Block> blocks_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Variable universe, coefficient field and monomial order; immutable.
class Ring {
 public:
  /// Variables are stored in canonical ascending order. The order must
  /// mention every variable exactly once.
  static RingPtr make(std::vector<VariableId> vars, Field field, MonomialOrder order);

  const std::vector<VariableId>& variables() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  const Field& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(const VariableId& v) const;
  std::size_t require_index(const VariableId& v) const;
  bool has(const VariableId& v) const { return index_of(v).has_value(); }

  /// Three-way comparison of monomials under this ring's order.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  bool same_universe(const Ring& other) const noexcept { return vars_ == other.vars_; }
  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_field(Field field) const;

  /// Slot of variable `v` set to exponent e.
  Monomial variable_monomial(const VariableId& v, unsigned e = 1) const;
  std::string monomial_string(const Monomial& m) const;

 private:
  struct ResolvedBlock {
    bool graded_reverse;
    std::vector<std::uint8_t> slots;  // largest variable first
  };

  Ring(std::vector<VariableId> vars, Field field, MonomialOrder order);

  std::vector<VariableId> vars_;
  Field field_;
  MonomialOrder order_;
  std::vector<ResolvedBlock> blocks_;
};

}  // namespace resint
