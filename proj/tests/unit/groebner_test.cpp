#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "resint/generic_matrix.hpp"
#include "resint/groebner.hpp"

namespace resint {
namespace {

using testing::rational_rank;

RingPtr grevlex_ring(int m, int n, Field field = Field::rationals()) {
  auto vars = generic_variables(m, n);
  return Ring::make(vars, field, MonomialOrder::grevlex(vars));
}

std::vector<Polynomial> ri_generators(const RingPtr& ring, int m, int n) {
  std::vector<Polynomial> gens;
  for (int i = 1; i <= m; ++i) gens.push_back(q_entry(ring, m, n, i));
  for (const auto& rows : testing::subsets(m, n)) gens.push_back(minor(ring, m, n, rows));
  return gens;
}

// All monomials of total degree d in `nvars` slots.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t slot, unsigned left) -> void {
    if (slot + 1 == nvars) {
      Monomial m = cur;
      m.set_exponent(slot, left);
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.set_exponent(slot, e);
      self(self, slot + 1, left - e);
    }
    cur.set_exponent(slot, 0);
  };
  rec(rec, 0, d);
  return out;
}

// Oracle: dim I_d from linear algebra on all products (monomial * generator),
// compared with the count of degree-d monomials lying in the initial ideal.
void expect_hilbert_agreement(const std::vector<Polynomial>& gens, const GroebnerBasis& gb, unsigned d) {
  const auto& ring = gb.ring();
  auto monos = monomials_of_degree(ring->size(), d);
  std::vector<std::vector<long>> rows;
  for (const auto& g : gens) {
    unsigned dg = g.total_degree();
    if (dg > d) continue;
    for (const auto& s : monomials_of_degree(ring->size(), d - dg)) {
      Polynomial p = g.mul_term(Scalar::one(ring->field()), s);
      std::vector<long> row(monos.size(), 0);
      for (const auto& t : p.terms()) {
        auto it = std::find(monos.begin(), monos.end(), t.mono);
        row[static_cast<std::size_t>(it - monos.begin())] = t.coeff.rational().get_num().get_si();
      }
      rows.push_back(std::move(row));
    }
  }
  std::size_t in_initial = 0;
  for (const auto& m : monos)
    for (const auto& lm : gb.leading_monomials())
      if (lm.divides(m)) {
        ++in_initial;
        break;
      }
  EXPECT_EQ(rational_rank(rows), in_initial) << "degree " << d;
}

// Naive division used to check the S-polynomial criterion independently.
Polynomial divide_remainder(Polynomial f, const std::vector<Polynomial>& gs) {
  Polynomial r(f.ring());
  while (!f.is_zero()) {
    const Term lt = f.leading_term();
    bool divided = false;
    for (const auto& g : gs) {
      if (g.leading_monomial().divides(lt.mono)) {
        f = f.sub_mul_term(lt.coeff / g.leading_coeff(), g.leading_monomial().quotient_of(lt.mono), g);
        divided = true;
        break;
      }
    }
    if (!divided) {
      r += Polynomial::term(f.ring(), lt.coeff, lt.mono);
      f -= Polynomial::term(f.ring(), lt.coeff, lt.mono);
    }
  }
  return r;
}

void expect_groebner_invariants(const GroebnerBasis& gb) {
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    EXPECT_TRUE(el[i].leading_coeff().is_one());
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : el[j].terms()) EXPECT_FALSE(el[i].leading_monomial().divides(t.mono));
    }
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      Monomial l = el[i].leading_monomial().lcm(el[j].leading_monomial());
      auto one = Scalar::one(gb.ring()->field());
      Polynomial s = el[i].mul_term(one, el[i].leading_monomial().quotient_of(l)) -
                     el[j].mul_term(one, el[j].leading_monomial().quotient_of(l));
      EXPECT_TRUE(divide_remainder(s, el).is_zero());
    }
  }
}

TEST(Buchberger, MonomialIdeal) {
  auto ring = grevlex_ring(1, 1);
  auto x = Polynomial::variable(ring, VariableId::X(1, 1));
  auto gb = buchberger(IdealBasis(ring, {x}));
  ASSERT_EQ(gb.elements().size(), 1u);
  EXPECT_EQ(gb.elements()[0], x);
  EXPECT_FALSE(gb.is_unit());
}

TEST(Buchberger, UnitIdealDetected) {
  auto ring = grevlex_ring(1, 1);
  auto x = Polynomial::variable(ring, VariableId::X(1, 1));
  auto y = Polynomial::variable(ring, VariableId::Y(1));
  auto gb = buchberger(IdealBasis(ring, {x * y - Polynomial::constant(ring, 1), x * x}));
  EXPECT_TRUE(gb.is_unit());
  EXPECT_TRUE(gb.contains(Polynomial::constant(ring, 1)));
}

TEST(Buchberger, ResidualTwoByTwoMatchesReference) {
  // SymPy grevlex (tests/oracles/sympy_oracles.py): the three generators are
  // already a reduced basis up to sign and normalisation.
  auto ring = grevlex_ring(2, 2);
  auto gb = buchberger(IdealBasis(ring, ri_generators(ring, 2, 2)));
  EXPECT_EQ(gb.to_string(),
            "x[1][2]*y[2] + x[1][1]*y[1]\n"
            "x[2][2]*y[2] + x[2][1]*y[1]\n"
            "-x[1][1]*x[2][2] + x[1][2]*x[2][1]\n");
}

TEST(Buchberger, ReducedBasisIndependentOfInputOrder) {
  for (auto [m, n] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}}) {
    auto ring = grevlex_ring(m, n, Field::prime());
    auto gens = ri_generators(ring, m, n);
    auto reference = buchberger(IdealBasis(ring, gens)).to_string();
    std::mt19937 rng(7 * m + n);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(gens.begin(), gens.end(), rng);
      std::vector<Polynomial> scaled;
      for (std::size_t k = 0; k < gens.size(); ++k)
        scaled.push_back(gens[k] * Scalar::from_int(ring->field(), static_cast<long>(k) + 2));
      EXPECT_EQ(buchberger(IdealBasis(ring, scaled)).to_string(), reference) << m << "," << n;
    }
  }
}

TEST(Buchberger, HilbertFunctionOracle) {
  for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 2}}) {
    auto ring = grevlex_ring(m, n);
    auto gens = ri_generators(ring, m, n);
    auto gb = buchberger(IdealBasis(ring, gens));
    expect_groebner_invariants(gb);
    for (unsigned d = 1; d <= 4; ++d) expect_hilbert_agreement(gens, gb, d);
  }
}

TEST(Buchberger, PaperLexInvariants) {
  auto ring = generic_ring(3, 2);
  auto gb = buchberger(IdealBasis(ring, ri_generators(ring, 3, 2)));
  expect_groebner_invariants(gb);
  for (const auto& g : ri_generators(ring, 3, 2)) EXPECT_TRUE(gb.contains(g));
}

TEST(Buchberger, RandomIdealsSatisfyCriterion) {
  auto ring = grevlex_ring(1, 2, Field::prime(101));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::random_polynomial(ring, rng, 3, 2));
    IdealBasis ideal(ring, gens);
    if (ideal.is_zero()) continue;
    auto gb = buchberger(ideal);
    expect_groebner_invariants(gb);
    for (const auto& g : ideal.generators()) EXPECT_TRUE(gb.contains(g));
  }
}

TEST(Buchberger, BudgetReportsStatistics) {
  auto ring = grevlex_ring(4, 2, Field::prime());
  Budget tiny;
  tiny.max_pairs = 2;
  try {
    buchberger(IdealBasis(ring, ri_generators(ring, 4, 2)), tiny);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GT(e.stats().pairs_processed, 2u);
  }
}

TEST(Buchberger, ExtendBasisMatchesFreshRun) {
  auto ring = grevlex_ring(3, 2, Field::prime());
  auto gens = ri_generators(ring, 3, 2);
  std::vector<Polynomial> first(gens.begin(), gens.begin() + 3);
  std::vector<Polynomial> rest(gens.begin() + 3, gens.end());
  auto partial = buchberger(IdealBasis(ring, first));
  auto extended = extend_basis(partial, rest);
  EXPECT_EQ(extended.to_string(), buchberger(IdealBasis(ring, gens)).to_string());
}

TEST(NormalForm, Properties) {
  auto ring = grevlex_ring(3, 2, Field::prime());
  auto gens = ri_generators(ring, 3, 2);
  auto gb = buchberger(IdealBasis(ring, gens));
  for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
  auto one = Polynomial::constant(ring, 1);
  EXPECT_EQ(normal_form(one, gb), one);
  auto y1 = Polynomial::variable(ring, VariableId::Y(1));
  EXPECT_TRUE(normal_form(y1 * gens[1] - y1 * gens[1], gb).is_zero());

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = testing::random_polynomial(ring, rng, 6, 2);
    auto nf = normal_form(f, gb);
    EXPECT_EQ(normal_form(nf, gb), nf);
    EXPECT_TRUE(gb.contains(f - nf));
  }
}

TEST(IdealBasis, DedupAndHash) {
  auto ring = grevlex_ring(2, 1);
  auto x = Polynomial::variable(ring, VariableId::X(1, 1));
  auto y = Polynomial::variable(ring, VariableId::Y(1));
  IdealBasis a(ring, {x, x * Scalar::from_int(ring->field(), 3), Polynomial(ring), y});
  EXPECT_EQ(a.size(), 2u);
  IdealBasis b(ring, {y, x});
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 64u);
  EXPECT_NE(a.hash(), IdealBasis(ring, {x}).hash());
}

}  // namespace
}  // namespace resint
