#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resint/groebner.hpp"

namespace resint {

/// Machine-readable record of one verification subroutine.
struct TraceRecord {
  std::string operation;
  std::string input_hash;
  std::string order;
  std::size_t pairs = 0;
  std::size_t max_terms = 0;
  double wall_seconds = 0.0;
  std::string verdict;
};

/// f ∈ √I, decided by whether 1 ∈ I + (1 − t·f) for a fresh variable t
/// placed below every other variable.
bool radical_membership(const Polynomial& f, const IdealBasis& ideal, const Budget& budget = {},
                        TraceRecord* trace = nullptr);
/// Same test reusing an existing Gröbner basis of I. When f already reduces
/// to zero no extra run is made.
bool radical_membership(const Polynomial& f, const GroebnerBasis& basis, const Budget& budget = {},
                        TraceRecord* trace = nullptr);

/// I ∩ J via elimination of t from t·I + (1 − t)·J.
IdealBasis intersect(const IdealBasis& a, const IdealBasis& b, const Budget& budget = {});
/// I : (g) = (I ∩ (g)) / g. Throws BadColon when g = 0.
IdealBasis colon(const IdealBasis& ideal, const Polynomial& g, const Budget& budget = {});
/// I : J as the intersection of I : (g) over the generators g of J.
IdealBasis colon_ideal(const IdealBasis& ideal, const IdealBasis& by, const Budget& budget = {});

/// Literal equality of ideals, checked by reducing each side's generators
/// modulo a Gröbner basis of the other.
bool ideal_equal(const IdealBasis& a, const IdealBasis& b, const Budget& budget = {});

/// Krull dimension of R/I from the initial ideal; −1 for the unit ideal.
int quotient_dimension(const GroebnerBasis& basis);
int quotient_dimension(const IdealBasis& ideal, const MonomialOrder& order, const Budget& budget = {});
inline constexpr int kEmptyVariety = -1;

/// I ∩ K[remaining variables], expressed in `target` (whose variables are
/// exactly the non-eliminated ones).
IdealBasis eliminate(const IdealBasis& ideal, const std::vector<VariableId>& variables,
                     const RingPtr& target, const Budget& budget = {});
/// Reduced basis of the elimination ideal, with the run statistics.
GroebnerBasis eliminate_basis(const IdealBasis& ideal, const std::vector<VariableId>& variables,
                              const RingPtr& target, const Budget& budget = {});

/// A variable of kind T not yet used by `ring`.
VariableId fresh_slack(const Ring& ring);

}  // namespace resint
