#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "resint/groebner.hpp"
#include "resint/labels.hpp"

namespace resint {

/// The specialization X -> X', y -> y' = (1, 0, ..., 0) as a substitution
/// into the generic ring over Q.
struct SpecialMatrixPair {
  int m = 0;
  int n = 0;
  RingPtr ring;
  std::map<VariableId, Polynomial> assignment;

  /// X'_{ij}: 0 when j != 1, j != i and i <= n, else x_{ij}.
  const Polynomial& x(int i, int j) const { return assignment.at(VariableId::X(i, j)); }
  const Polynomial& y(int j) const { return assignment.at(VariableId::Y(j)); }
  Polynomial apply(const Polynomial& f) const { return f.substitute(assignment, ring); }
};

SpecialMatrixPair special_matrices(int m, int n);

/// One element of D with its display name ("M[3,2]", "M[n,n]" or "Q1").
struct DElement {
  std::string name;
  GeneratorLabel label;
};

struct TransBasisD {
  int m = 0;
  int n = 0;
  std::vector<DElement> elements;  // M[i,j] by (i, j), then M[n,n], then Q1..Qm

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const GeneratorLabel& label) const;
  std::vector<GeneratorLabel> labels() const;
};

/// Throws BadShape unless m >= n >= 1.
TransBasisD build_D(int m, int n);
/// (1..n without j) followed by i.
GeneratorLabel m_label(int n, int i, int j);

struct SpecializedElement {
  DElement element;
  Polynomial substituted;  // generic polynomial under (X', y')
  Polynomial closed_form;  // the predicted signed monomial
  bool matches = false;
};

std::vector<SpecializedElement> specialize_D(int m, int n);

struct IndependenceReport {
  std::size_t elements = 0;
  std::size_t variables = 0;
  int rank = 0;
  bool supports_distinct = false;  // logged separately from the rank statement
  bool ok() const noexcept { return rank == static_cast<int>(elements); }
};

/// Exponent-matrix rank of the specialized D. Throws StructureViolation when
/// an element does not specialize to a signed monomial.
IndependenceReport independence_by_exponents(int m, int n);

/// Numerical cross-check in characteristic 0: rank of the Jacobian of D at a
/// random integer point.
int jacobian_rank(int m, int n, std::uint64_t seed = 1);

struct PlueckerTerm {
  int sign = 1;
  int exchanged = 0;          // the row s moved from beta to alpha
  std::vector<int> left;      // alpha + {s}, sorted
  std::vector<int> right;     // beta - {s}
  bool vanishes = false;      // s already in alpha
};

/// sum over s in beta of sign * [alpha + s][beta - s] = 0.
struct PlueckerRelation {
  int m = 0;
  int n = 0;
  std::vector<int> alpha;
  std::vector<int> beta;
  std::vector<PlueckerTerm> terms;

  Polynomial expand(const RingPtr& ring) const;
  /// "[1,2]*[3,4] - [1,3]*[2,4] + [1,4]*[2,3] = 0" (vanishing terms omitted).
  std::string to_string() const;
};

/// alpha strictly increasing of size n-1, beta of size n+1, all in 1..m; BadPluecker otherwise.
PlueckerRelation plucker_relation(int m, int n, const std::vector<int>& alpha, const std::vector<int>& beta);

/// The exchange for a row-1 minor with k >= 2 rows beyond n: alpha drops the
/// last row i_k, beta = {1..n, i_k}. BadPluecker for other row sets.
PlueckerRelation appendix_plucker(int m, int n, const std::vector<int>& rows);

/// Rational expression over D. Sums carry small integer coefficients and
/// quotients divide by a product of elements of D.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Leaf, Sum, Product, Quotient };
  Kind kind = Kind::Leaf;
  GeneratorLabel label;                          // Leaf
  std::vector<std::pair<long, ExprPtr>> terms;   // Sum
  std::vector<ExprPtr> factors;                  // Product; Quotient numerator is factors[0]
  std::vector<GeneratorLabel> denominator;       // Quotient

  static ExprPtr leaf(GeneratorLabel l);
  static ExprPtr sum(std::vector<std::pair<long, ExprPtr>> terms);
  static ExprPtr product(std::vector<ExprPtr> factors);
  static ExprPtr quotient(ExprPtr numerator, std::vector<GeneratorLabel> denominator);

  /// "(/ (+ (* [1,3] Q2) (* -1 [1,2] Q3)) Q1)".
  std::string to_prefix() const;
  std::size_t node_count() const;
  /// Leaf labels, sorted and deduplicated.
  std::vector<GeneratorLabel> leaves() const;
};

/// An expression with its cleared form: label * denominator == numerator.
struct Rewrite {
  GeneratorLabel label;
  ExprPtr expr;
  std::vector<std::pair<GeneratorLabel, int>> denominator;  // D-element powers
  Polynomial numerator;
  Polynomial cleared_lhs;  // label * denominator, expanded
  bool verified = false;
  int phase = 0;  // 0 in D, 1 Pluecker exchange, 2 bordered determinant
};

/// Rewrites a single element of B over D.
Rewrite rewrite_in_D(const GeneratorLabel& label, int m, int n, const Budget& budget = {});

struct TransCertificate {
  int m = 0;
  int n = 0;
  TransBasisD d;
  std::vector<SpecializedElement> specialized;
  IndependenceReport independence;
  std::vector<Rewrite> rewrites;  // all of B in canonical order
  int dimension = 0;
  bool closed_forms_match = false;
  bool all_rewrites_verified = false;
  bool size_matches = false;
  bool ok() const noexcept {
    return closed_forms_match && independence.ok() && all_rewrites_verified && size_matches;
  }
};

TransCertificate verify_transcendence_basis(int m, int n, const Budget& budget = {});

}  // namespace resint
