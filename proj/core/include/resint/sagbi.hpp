#pragma once

#include <optional>
#include <vector>

#include "resint/instance.hpp"

namespace resint {

/// P_k -> leading monomial of the k-th generator (canonical label order, k from 1).
struct MonomialAlgebraMap {
  RingPtr ambient;  // ring of the instance
  std::vector<GeneratorLabel> labels;
  std::vector<Monomial> targets;

  VariableId variable(std::size_t k) const { return VariableId::P(static_cast<int>(k) + 1); }
  std::size_t index_of(const VariableId& p) const { return static_cast<std::size_t>(p.a - 1); }
  /// "Y[k] = label" lines.
  std::string legend() const;
};

MonomialAlgebraMap initial_generators(const ResidualInstance& instance);

/// Rank over Q of the matrix whose rows are the exponent vectors.
int exponent_rank(const std::vector<Monomial>& rows, std::size_t slots);

/// Rank over Q of the exponent matrix of the targets.
int semigroup_dimension(const MonomialAlgebraMap& map);

/// P variables sorted by (rank, Q before minors, row set), smallest first,
/// under graded reverse lex.
MonomialOrder tau_order(const ResidualInstance& instance);
/// The same order as a ring over `field`.
RingPtr tau_ring(const ResidualInstance& instance, Field field = Field::rationals());

struct ToricKernel {
  RingPtr ring;  // P variables under tau
  GroebnerBasis basis;
  std::vector<GeneratorLabel> labels;
};

/// Kernel of P_k -> target_k over Q, as a reduced basis under tau.
ToricKernel toric_kernel(const ResidualInstance& instance, const Budget& budget = {});

struct SquarefreeReport {
  std::size_t generators = 0;
  std::size_t incomparable_pairs = 0;
  bool all_binomial = true;
  bool all_in_kernel = true;
  bool squarefree = true;
  bool incomparable_products = true;  // every leading term is P_a P_b, a and b incomparable
  bool bijective = true;              // leading terms are exactly the incomparable products
  bool ok() const noexcept {
    return all_binomial && all_in_kernel && squarefree && incomparable_products && bijective;
  }
};

SquarefreeReport verify_squarefree_initial(const ResidualInstance& instance, const ToricKernel& kernel);
SquarefreeReport verify_squarefree_initial(const ResidualInstance& instance, const Budget& budget = {});

struct SagbiReport {
  std::size_t binomials = 0;
  std::size_t skipped = 0;  // above the degree cap
  std::size_t subduction_steps = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_traces;
  bool ok() const noexcept { return failures == 0 && skipped == 0; }
};

/// Decomposes a monomial as a product of targets (indices, with repetition).
std::optional<std::vector<std::size_t>> factor_in_semigroup(const MonomialAlgebraMap& map, const Monomial& m);

/// Lifts each kernel binomial of P-degree <= degree to B and subduces it to 0.
SagbiReport verify_sagbi(const ResidualInstance& instance, const ToricKernel& kernel, int degree = 2);
SagbiReport verify_sagbi(const ResidualInstance& instance, int degree = 2, const Budget& budget = {});

}  // namespace resint
