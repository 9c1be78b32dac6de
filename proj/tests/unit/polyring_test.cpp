#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "resint/errors.hpp"
#include "resint/generic_matrix.hpp"

using namespace resint;
using resint::testing::leibniz_minor;
using resint::testing::random_polynomial;
using resint::testing::subsets;

namespace {

Polynomial x(const RingPtr& r, int i, int j) { return Polynomial::variable(r, VariableId::X(i, j)); }
Polynomial y(const RingPtr& r, int i) { return Polynomial::variable(r, VariableId::Y(i)); }

Monomial mono(const RingPtr& r, std::initializer_list<VariableId> vars) {
  Monomial m;
  for (const auto& v : vars) {
    auto idx = r->require_index(v);
    m.set_exponent(idx, m.exponent(idx) + 1);
  }
  return m;
}

}  // namespace

TEST(Scalar, RationalsStayReduced) {
  auto q = Field::rationals();
  auto a = Scalar::from_rational(q, 6, -4);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ((a + Scalar::from_rational(q, 3, 2)).to_string(), "0");
  EXPECT_TRUE((a * a.inverse()).is_one());
}

TEST(Scalar, ResiduesPrintSymmetric) {
  auto f = Field::prime();
  EXPECT_EQ(Scalar::from_int(f, -1).residue(), 32002u);
  EXPECT_EQ(Scalar::from_int(f, -1).to_string(), "-1");
  EXPECT_TRUE((Scalar::from_int(f, 7) / Scalar::from_int(f, 7)).is_one());
  EXPECT_THROW(Field::prime(32001), std::invalid_argument);
}

TEST(Scalar, MixedFieldsRejected) {
  auto a = Scalar::one(Field::prime(7));
  EXPECT_THROW(a + Scalar::one(Field::prime(11)), IncompatibleField);
  EXPECT_THROW(a * Scalar::one(Field::rationals()), IncompatibleField);
}

TEST(FieldParse, AcceptedSpellings) {
  EXPECT_TRUE(Field::parse("Q").is_rational());
  EXPECT_EQ(Field::parse("Fp").characteristic(), 32003u);
  EXPECT_EQ(Field::parse("Fp:101").characteristic(), 101u);
  EXPECT_EQ(Field::parse("ZZ/7").characteristic(), 7u);
  EXPECT_EQ(Field::parse("Fp(32003)").characteristic(), 32003u);
  EXPECT_THROW(Field::parse("R"), std::invalid_argument);
}

TEST(PolyAdd, Examples) {
  auto r = generic_ring(2, 2);
  EXPECT_EQ((x(r, 1, 1) + y(r, 1)) + (-y(r, 1)), x(r, 1, 1));
  auto f = x(r, 1, 1) * y(r, 1) + x(r, 1, 2) * y(r, 2);
  EXPECT_EQ(Polynomial(r) + f, f);
  auto g = f + x(r, 1, 1) * y(r, 1);
  EXPECT_EQ(g.to_string(), "x[1][2]*y[2] + 2*x[1][1]*y[1]");
}

TEST(PolyAdd, IncompatibleFieldIsAnError) {
  auto rq = generic_ring(2, 2);
  auto rp = generic_ring(2, 2, Field::prime());
  EXPECT_THROW(x(rq, 1, 1) + x(rp, 1, 1), IncompatibleField);
  EXPECT_THROW(x(rq, 1, 1) * x(rp, 1, 1), IncompatibleField);
}

TEST(PolyMul, Examples) {
  auto r = generic_ring(2, 2);
  auto one = Polynomial::constant(r, 1);
  auto f = x(r, 1, 1) - x(r, 1, 2);
  EXPECT_EQ(f * one, f);
  EXPECT_EQ(f * (x(r, 1, 1) + x(r, 1, 2)), x(r, 1, 1).pow(2) - x(r, 1, 2).pow(2));
  auto q1 = q_entry(r, 2, 2, 1);
  // Expanded by hand: (a + b)^2 with a = x11 y1, b = x12 y2.
  auto a = x(r, 1, 1) * y(r, 1);
  auto b = x(r, 1, 2) * y(r, 2);
  EXPECT_EQ(q1 * q1, a * a + Polynomial::constant(r, 2) * a * b + b * b);
  EXPECT_EQ((q1 * q1).to_string(), "x[1][2]^2*y[2]^2 + 2*x[1][1]*x[1][2]*y[1]*y[2] + x[1][1]^2*y[1]^2");
}

TEST(PolyLeadingMonomial, PaperLexFormulas) {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= m; ++n) {
      auto r = generic_ring(m, n);
      for (int i = 1; i <= m; ++i)
        EXPECT_EQ(q_entry(r, m, n, i).leading_monomial(),
                  mono(r, {VariableId::X(i, n), VariableId::Y(n)}));
      if (n > 4) continue;
      for (const auto& rows : subsets(m, n)) {
        Monomial expect;
        for (int k = 0; k < n; ++k) {
          auto idx = r->require_index(VariableId::X(rows[k], k + 1));
          expect.set_exponent(idx, 1);
        }
        EXPECT_EQ(minor(r, m, n, rows).leading_monomial(), expect);
      }
    }
  }
}

TEST(PolyLeadingMonomial, ClaimsUnderExplicitOrder) {
  auto r = generic_ring(2, 2);
  EXPECT_EQ(leading_monomial(y(r, 1) + y(r, 2), r->order()), mono(r, {VariableId::Y(2)}));
  auto grevlex = MonomialOrder::grevlex(r->variables());
  auto f = y(r, 1).pow(3) + x(r, 1, 1) * y(r, 1);
  EXPECT_EQ(leading_monomial(f, grevlex), mono(r, {VariableId::Y(1), VariableId::Y(1), VariableId::Y(1)}));
  EXPECT_THROW(Polynomial(r).leading_monomial(), ZeroPolynomial);
  EXPECT_THROW(leading_monomial(Polynomial(r), grevlex), ZeroPolynomial);
}

TEST(Minor, SmallCases) {
  auto r22 = generic_ring(2, 2);
  std::vector<int> rows{1, 2};
  EXPECT_EQ(minor(r22, 2, 2, rows), x(r22, 1, 1) * x(r22, 2, 2) - x(r22, 1, 2) * x(r22, 2, 1));
  auto r42 = generic_ring(4, 2);
  std::vector<int> rows14{1, 4};
  EXPECT_EQ(minor(r42, 4, 2, rows14), x(r42, 1, 1) * x(r42, 4, 2) - x(r42, 1, 2) * x(r42, 4, 1));
  auto r33 = generic_ring(3, 3);
  std::vector<int> rows3{1, 2, 3};
  auto d = minor(r33, 3, 3, rows3);
  EXPECT_EQ(d.size(), 6u);
  EXPECT_EQ(d, leibniz_minor(r33, rows3, 3));
}

TEST(Minor, MatchesLeibnizOracle) {
  for (int n = 1; n <= 5; ++n) {
    int m = n + 1;
    auto r = generic_ring(m, n);
    for (const auto& rows : subsets(m, n)) EXPECT_EQ(minor(r, m, n, rows), leibniz_minor(r, rows, n));
  }
}

TEST(Minor, LaplaceAndBareissAgree) {
  std::mt19937 rng(7);
  for (int n = 1; n <= 4; ++n) {
    auto r = generic_ring(n, n);
    std::vector<int> rows(n);
    for (int k = 0; k < n; ++k) rows[k] = k + 1;
    auto a = submatrix(r, rows, n);
    EXPECT_EQ(determinant_laplace(a), determinant_bareiss(a));
    // Sparse random entries exercise pivoting.
    PolyMatrix b(n, std::vector<Polynomial>(n, Polynomial(r)));
    for (auto& row : b)
      for (auto& e : row) e = rng() % 3 == 0 ? Polynomial(r) : random_polynomial(r, rng, 2, 1);
    EXPECT_EQ(determinant_laplace(b), determinant_bareiss(b));
  }
}

TEST(Minor, BadRowSets) {
  auto r = generic_ring(4, 2);
  std::vector<int> unsorted{2, 1}, out_of_range{1, 5}, short_rows{1};
  EXPECT_THROW(minor(r, 4, 2, unsorted), BadRowSet);
  EXPECT_THROW(minor(r, 4, 2, out_of_range), BadRowSet);
  EXPECT_THROW(minor(r, 4, 2, short_rows), BadRowSet);
}

TEST(QEntry, Examples) {
  auto r = generic_ring(4, 2);
  EXPECT_EQ(q_entry(r, 4, 2, 1), x(r, 1, 1) * y(r, 1) + x(r, 1, 2) * y(r, 2));
  EXPECT_EQ(q_entry(r, 4, 2, 1).to_string(), "x[1][2]*y[2] + x[1][1]*y[1]");
  auto r1 = generic_ring(5, 1);
  EXPECT_EQ(q_entry(r1, 5, 1, 3), x(r1, 3, 1) * y(r1, 1));
  auto r3 = generic_ring(3, 3);
  EXPECT_EQ(q_entry(r3, 3, 3, 2), x(r3, 2, 1) * y(r3, 1) + x(r3, 2, 2) * y(r3, 2) + x(r3, 2, 3) * y(r3, 3));
  EXPECT_THROW(q_entry(r, 4, 2, 0), BadIndex);
  EXPECT_THROW(q_entry(r, 4, 2, 5), BadIndex);
}

TEST(BorderedDeterminant, TwoByTwoCofactors) {
  std::vector<int> rows{1, 2};
  auto e = bordered_determinant(3, 2, rows, 3);
  ASSERT_EQ(e.terms.size(), 3u);
  EXPECT_EQ(e.terms[0].sign, 1);
  EXPECT_EQ(e.terms[0].q_row, 1);
  EXPECT_EQ(e.terms[0].minor_rows, (std::vector<int>{2, 3}));
  EXPECT_EQ(e.terms[1].sign, -1);
  EXPECT_EQ(e.terms[1].q_row, 2);
  EXPECT_EQ(e.terms[1].minor_rows, (std::vector<int>{1, 3}));
  EXPECT_EQ(e.terms[2].sign, 1);
  EXPECT_EQ(e.terms[2].q_row, 3);
  EXPECT_EQ(e.terms[2].minor_rows, (std::vector<int>{1, 2}));
  auto r = generic_ring(3, 2);
  EXPECT_TRUE(e.expand(r, 3, 2).is_zero());
}

TEST(BorderedDeterminant, VanishesForAllAdmissibleInputs) {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 1; n < m && n <= 4; ++n) {
      auto r = generic_ring(m, n);
      for (const auto& rows : subsets(m, n))
        for (int j = rows.back() + 1; j <= m; ++j)
          EXPECT_TRUE(bordered_determinant(m, n, rows, j).expand(r, m, n).is_zero())
              << "m=" << m << " n=" << n << " j=" << j;
    }
  }
  std::vector<int> rows{1, 2, 3};
  auto e = bordered_determinant(4, 3, rows, 4);
  EXPECT_EQ(e.terms.size(), 4u);
  EXPECT_TRUE(e.expand(generic_ring(4, 3), 4, 3).is_zero());
}

TEST(BorderedDeterminant, ComparableInputRejected) {
  std::vector<int> rows{1, 3};
  EXPECT_THROW(bordered_determinant(4, 2, rows, 3), NotIncomparable);
  EXPECT_THROW(bordered_determinant(4, 2, rows, 2), NotIncomparable);
}

TEST(RingAxioms, RandomizedIdentities) {
  for (auto field : {Field::rationals(), Field::prime()}) {
    auto r = generic_ring(2, 2, field);
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
      auto f = random_polynomial(r, rng, 5, 2);
      auto g = random_polynomial(r, rng, 4, 2);
      auto h = random_polynomial(r, rng, 3, 2);
      EXPECT_EQ((f + g) + h, f + (g + h));
      EXPECT_EQ(f + g, g + f);
      EXPECT_EQ(f * g, g * f);
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_TRUE((f - f).is_zero());
      if (!f.is_zero() && !g.is_zero())
        EXPECT_EQ((f * g).leading_monomial(), f.leading_monomial() * g.leading_monomial());
    }
  }
}

TEST(Substitute, IdentityAndExactDivision) {
  auto r = generic_ring(3, 2);
  std::map<VariableId, Polynomial> id;
  for (const auto& v : r->variables()) id.emplace(v, Polynomial::variable(r, v));
  std::vector<int> rows{1, 3};
  auto d = minor(r, 3, 2, rows);
  EXPECT_EQ(d.substitute(id, r), d);
  auto q = q_entry(r, 3, 2, 2);
  EXPECT_EQ((d * q).divide_exact(q), d);
  EXPECT_THROW((d + Polynomial::constant(r, 1)).divide_exact(q), NotDivisible);
  std::map<VariableId, Polynomial> partial{{VariableId::X(1, 1), x(r, 1, 1)}};
  EXPECT_THROW(d.substitute(partial, r), BadAssignment);
}
