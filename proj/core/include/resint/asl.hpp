#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resint/instance.hpp"

namespace resint {

/// A multichain of B, stored from least to greatest.
struct StandardMonomial {
  std::vector<GeneratorLabel> labels;

  std::string to_string() const;  // "Q1*[1,3]", or "1" when empty
  friend bool operator==(const StandardMonomial&, const StandardMonomial&) = default;
};

struct StraighteningTerm {
  Scalar coeff;
  StandardMonomial monomial;
};

/// a * b = sum of coeff * monomial over standard monomials.
struct StraighteningRelation {
  GeneratorLabel a;
  GeneratorLabel b;
  std::vector<StraighteningTerm> right;

  std::string to_string() const;
};

/// Sort key placing comparable labels in poset order.
void sort_chain(const BPoset& poset, std::vector<GeneratorLabel>& labels);
/// Adjacent labels comparable in the given order.
bool is_chain(const std::vector<GeneratorLabel>& sorted);

std::vector<StandardMonomial> enumerate_standard_monomials(const BPoset& poset, int degree);

/// Product of the generator polynomials in the instance ring.
Polynomial expand(const ResidualInstance& instance, const std::vector<GeneratorLabel>& labels);

struct Asl1Report {
  int degree_bound = 0;
  std::size_t standard_monomials = 0;
  std::size_t products_checked = 0;
  bool distinct_leading = true;
  bool spanning = true;
  bool ok() const noexcept { return distinct_leading && spanning; }
};

/// For every degree <= bound: standard monomials have pairwise distinct
/// PaperLex leading monomials, and every product of generators lies in
/// their span.
Asl1Report verify_asl1(const ResidualInstance& instance, int degree_bound);

/// Throws NotIncomparable for comparable labels.
StraighteningRelation straighten(const ResidualInstance& instance, const GeneratorLabel& a,
                                 const GeneratorLabel& b);

/// Exact identity, chain form of every term and the strict-minimum condition.
bool check_relation(const ResidualInstance& instance, const BPoset& poset, const StraighteningRelation& rel);

struct Asl2Options {
  std::size_t sample = 0;  // 0: every incomparable pair
  std::uint64_t seed = 0;
};

struct Asl2Report {
  std::size_t incomparable_pairs = 0;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<StraighteningRelation> relations;
  bool ok() const noexcept { return failures == 0; }
};

Asl2Report verify_asl2(const ResidualInstance& instance, const Asl2Options& options = {});

}  // namespace resint
