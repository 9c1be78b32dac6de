#pragma once

#include <map>
#include <string>
#include <vector>

#include "resint/ring.hpp"
#include "resint/scalar.hpp"

namespace resint {

struct Term {
  Scalar coeff;
  Monomial mono;
};

/// Sparse polynomial; terms strictly descending under the ring's order with
/// nonzero coefficients. The empty term list is zero.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, const VariableId& v);
  static Polynomial term(RingPtr ring, const Scalar& c, const Monomial& m);
  /// Sorts, merges duplicates and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  /// Throws ZeroPolynomial on zero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }
  unsigned total_degree() const noexcept;
  bool is_homogeneous() const noexcept;
  bool uses_variable(const VariableId& v) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(Polynomial f, const Scalar& c) { return f *= c; }

  Polynomial mul_term(const Scalar& c, const Monomial& m) const;
  /// this - c*m*g, computed by a single merge.
  Polynomial sub_mul_term(const Scalar& c, const Monomial& m, const Polynomial& g) const;
  Polynomial pow(unsigned k) const;
  /// Scaled so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  /// Same polynomial in another ring holding all its variables (re-sorted).
  Polynomial in_ring(const RingPtr& target) const;
  /// Replace each variable by a polynomial of `target`. Every variable that
  /// occurs must be assigned, otherwise BadAssignment.
  Polynomial substitute(const std::map<VariableId, Polynomial>& assignment,
                        const RingPtr& target) const;
  /// Exact quotient; throws NotDivisible if g does not divide.
  Polynomial divide_exact(const Polynomial& g) const;

  /// Canonical text: terms descending under the canonical lex sequence
  /// t < y[1] < ... < x[1][1] < ... regardless of the ring's order.
  std::string to_string() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);
  friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}
  /// Returns g expressed in this ring's order; throws on field/universe mismatch.
  Polynomial aligned(const Polynomial& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Leading monomial of f under `order` (f's variables must all occur in it).
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

}  // namespace resint
