#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "resint/appendix.hpp"
#include "resint/generic_matrix.hpp"
#include "resint/poset.hpp"

namespace resint {
namespace {

using L = GeneratorLabel;

std::set<std::string> names(const std::vector<GeneratorLabel>& labels) {
  std::set<std::string> out;
  for (const auto& l : labels) out.insert(l.to_string());
  return out;
}

// Leibniz expansion over the specialized entries, skipping permutations that hit a zero.
Polynomial specialized_minor_oracle(const RingPtr& ring, int n, const std::vector<int>& rows) {
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k + 1;
  Polynomial sum(ring);
  do {
    Polynomial prod = Polynomial::constant(ring, testing::permutation_sign(perm));
    bool zero = false;
    for (int k = 0; k < n && !zero; ++k) {
      int i = rows[k], j = perm[k];
      if (j != 1 && j != i && i <= n)
        zero = true;
      else
        prod *= Polynomial::variable(ring, VariableId::X(i, j));
    }
    if (!zero) sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

TEST(BuildD, ShapesAndCounts) {
  auto d42 = build_D(4, 2);
  EXPECT_EQ(names(d42.labels()), (std::set<std::string>{"[1,3]", "[1,4]", "[1,2]", "Q1", "Q2", "Q3", "Q4"}));
  EXPECT_EQ(d42.elements[0].name, "M[3,2]");
  EXPECT_EQ(d42.elements[0].label, L::Minor({1, 3}));
  auto d33 = build_D(3, 3);
  EXPECT_EQ(names(d33.labels()), (std::set<std::string>{"[1,2,3]", "Q1", "Q2", "Q3"}));
  EXPECT_EQ(build_D(5, 3).size(), 10u);
  EXPECT_EQ(m_label(3, 5, 2), L::Minor({1, 3, 5}));
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= m; ++n)
      EXPECT_EQ(static_cast<int>(build_D(m, n).size()), (m - n) * (n - 1) + 1 + m) << m << "," << n;
  EXPECT_THROW(build_D(2, 3), BadShape);
}

TEST(SpecialMatrices, Pattern) {
  auto s = special_matrices(4, 3);
  EXPECT_TRUE(s.x(1, 2).is_zero());
  EXPECT_TRUE(s.x(2, 3).is_zero());
  EXPECT_FALSE(s.x(2, 2).is_zero());
  EXPECT_FALSE(s.x(3, 1).is_zero());
  EXPECT_FALSE(s.x(4, 2).is_zero());
  EXPECT_EQ(s.y(1), Polynomial::constant(s.ring, 1));
  EXPECT_TRUE(s.y(2).is_zero());
}

TEST(SpecializeD, ClosedFormsMatchSubstitution) {
  auto sp = specialize_D(4, 2);
  auto ring = sp.front().substituted.ring();
  auto x = [&](int i, int j) { return Polynomial::variable(ring, VariableId::X(i, j)); };
  for (const auto& s : sp) {
    if (s.element.label == L::Q(3)) EXPECT_EQ(s.substituted, x(3, 1));
    if (s.element.name == "M[2,2]") EXPECT_EQ(s.substituted, x(1, 1) * x(2, 2));
    if (s.element.name == "M[3,2]") EXPECT_EQ(s.substituted, x(3, 2) * x(1, 1));
  }
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= m; ++n)
      for (const auto& s : specialize_D(m, n)) {
        EXPECT_TRUE(s.matches) << m << "," << n << " " << s.element.name;
        if (s.element.label.is_minor())
          EXPECT_EQ(s.substituted, specialized_minor_oracle(s.substituted.ring(), n, s.element.label.rows));
      }
}

TEST(SpecializeD, SignAlternatesWithColumn) {
  // (5,3): M[4,2] = [1,3,4] carries (-1)^5, M[4,3] = [1,2,4] carries (-1)^6.
  for (const auto& s : specialize_D(5, 3)) {
    if (s.element.name == "M[4,2]") EXPECT_EQ(s.substituted.leading_coeff().to_string(), "-1");
    if (s.element.name == "M[4,3]") EXPECT_EQ(s.substituted.leading_coeff().to_string(), "1");
  }
}

TEST(Independence, ExponentRank) {
  auto r42 = independence_by_exponents(4, 2);
  EXPECT_EQ(r42.rank, 7);
  EXPECT_EQ(r42.elements, 7u);
  EXPECT_EQ(r42.variables, 10u);
  EXPECT_TRUE(r42.supports_distinct);
  EXPECT_EQ(independence_by_exponents(3, 3).rank, 4);
  EXPECT_EQ(independence_by_exponents(2, 2).rank, 3);
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= m; ++n) {
      auto r = independence_by_exponents(m, n);
      EXPECT_TRUE(r.ok()) << m << "," << n;
      EXPECT_EQ(r.rank, make_b_poset(m, n).poset.poset_rank());
      EXPECT_EQ(jacobian_rank(m, n, 7), r.rank) << m << "," << n;
    }
}

TEST(Pluecker, ClassicalThreeTerm) {
  auto rel = plucker_relation(4, 2, {1}, {2, 3, 4});
  EXPECT_EQ(rel.to_string(), "[1,2]*[3,4] - [1,3]*[2,4] + [1,4]*[2,3] = 0");
  auto ring = generic_ring(4, 2);
  EXPECT_TRUE(rel.expand(ring).is_zero());
  // Oracle: the same identity from Leibniz-expanded minors.
  auto mn = [&](std::vector<int> r) { return testing::leibniz_minor(ring, r, 2); };
  EXPECT_TRUE((mn({1, 4}) * mn({2, 3}) - mn({1, 3}) * mn({2, 4}) + mn({1, 2}) * mn({3, 4})).is_zero());
}

TEST(Pluecker, AppendixShapeAndCollisions) {
  auto ring = generic_ring(6, 3);
  auto rel = appendix_plucker(6, 3, {1, 4, 5});
  EXPECT_EQ(rel.alpha, (std::vector<int>{1, 4}));
  EXPECT_EQ(rel.beta, (std::vector<int>{1, 2, 3, 5}));
  std::size_t vanishing = 0;
  for (const auto& t : rel.terms) vanishing += t.vanishes;
  EXPECT_EQ(vanishing, 1u);  // s = 1
  EXPECT_TRUE(rel.expand(ring).is_zero());

  auto r2 = appendix_plucker(6, 4, {1, 2, 5, 6});
  EXPECT_TRUE(r2.expand(generic_ring(6, 4)).is_zero());
  for (const auto& t : r2.terms) EXPECT_EQ(t.vanishes, t.exchanged == 1 || t.exchanged == 2);

  // Other well-formed tuples, including ones outside the exchange shape.
  auto r53 = generic_ring(5, 3);
  for (auto [a, b] : {std::pair<std::vector<int>, std::vector<int>>{{2, 5}, {1, 3, 4, 5}},
                      {{1, 2}, {2, 3, 4, 5}}, {{3, 4}, {1, 2, 3, 5}}})
    EXPECT_TRUE(plucker_relation(5, 3, a, b).expand(r53).is_zero());
}

TEST(Pluecker, Malformed) {
  EXPECT_THROW(plucker_relation(4, 2, {1, 2}, {2, 3, 4}), BadPluecker);
  EXPECT_THROW(plucker_relation(4, 2, {1}, {2, 3}), BadPluecker);
  EXPECT_THROW(plucker_relation(4, 2, {1}, {3, 2, 4}), BadPluecker);
  EXPECT_THROW(plucker_relation(4, 2, {5}, {1, 2, 3}), BadPluecker);
  EXPECT_THROW(appendix_plucker(6, 3, {2, 4, 5}), BadPluecker);
  EXPECT_THROW(appendix_plucker(6, 3, {1, 2, 5}), BadPluecker);
}

TEST(RewriteInD, MembersAreLeaves) {
  auto r = rewrite_in_D(L::Q(2), 4, 2);
  EXPECT_EQ(r.phase, 0);
  EXPECT_EQ(r.expr->to_prefix(), "Q2");
  EXPECT_TRUE(r.verified);
  EXPECT_TRUE(r.denominator.empty());
}

TEST(RewriteInD, BorderedDeterminantFourTwo) {
  auto r = rewrite_in_D(L::Minor({2, 3}), 4, 2);
  EXPECT_EQ(r.phase, 2);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.expr->to_prefix(), "(/ (+ (* [1,3] Q2) (* -1 [1,2] Q3)) Q1)");
  ASSERT_EQ(r.denominator.size(), 1u);
  EXPECT_EQ(r.denominator[0].first, L::Q(1));
  // Independent check of the cleared identity from Leibniz minors.
  auto ring = generic_ring(4, 2);
  auto mn = [&](std::vector<int> rows) { return testing::leibniz_minor(ring, rows, 2); };
  auto q = [&](int i) { return q_entry(ring, 4, 2, i); };
  EXPECT_TRUE((mn({2, 3}) * q(1) - mn({1, 3}) * q(2) + mn({1, 2}) * q(3)).is_zero());

  auto r24 = rewrite_in_D(L::Minor({2, 4}), 4, 2);
  EXPECT_TRUE(r24.verified);
  EXPECT_EQ(r24.expr->to_prefix(), "(/ (+ (* [1,4] Q2) (* -1 [1,2] Q4)) Q1)");
}

TEST(RewriteInD, ExchangeUsesOnlyD) {
  auto d = build_D(6, 3);
  for (const auto& l : {L::Minor({1, 4, 5}), L::Minor({1, 5, 6}), L::Minor({2, 5, 6}), L::Minor({4, 5, 6})}) {
    auto r = rewrite_in_D(l, 6, 3);
    EXPECT_TRUE(r.verified) << l.to_string();
    for (const auto& leaf : r.expr->leaves()) EXPECT_TRUE(d.contains(leaf)) << leaf.to_string();
    for (const auto& [den, k] : r.denominator)
      EXPECT_TRUE(den == L::Q(1) || den == L::Minor({1, 2, 3})) << den.to_string();
  }
  EXPECT_EQ(rewrite_in_D(L::Minor({1, 4, 5}), 6, 3).phase, 1);
  EXPECT_THROW(rewrite_in_D(L::Minor({1, 2}), 6, 3), BadIndex);
}

TEST(RewriteInD, BudgetIsEnforced) {
  Budget tiny;
  tiny.max_terms = 3;
  EXPECT_THROW(rewrite_in_D(L::Minor({4, 5, 6}), 6, 3, tiny), BudgetExceeded);
}

TEST(TransBasis, Certificates) {
  for (auto [m, n, dim] : {std::tuple{4, 2, 7}, std::tuple{3, 2, 5}, std::tuple{3, 3, 4}, std::tuple{5, 3, 10},
                           std::tuple{2, 2, 3}, std::tuple{6, 3, 13}, std::tuple{6, 4, 13}, std::tuple{6, 5, 11}}) {
    auto c = verify_transcendence_basis(m, n);
    EXPECT_TRUE(c.ok()) << m << "," << n;
    EXPECT_EQ(c.dimension, dim);
    EXPECT_EQ(c.rewrites.size(), all_labels(m, n).size());
  }
}

}  // namespace
}  // namespace resint
