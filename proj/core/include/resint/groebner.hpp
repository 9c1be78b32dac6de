#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "resint/errors.hpp"
#include "resint/polynomial.hpp"

namespace resint {

/// Resource caps for one Gröbner run. Exceeding any of them raises
/// BudgetExceeded carrying the statistics gathered so far.
struct Budget {
  std::size_t max_pairs = 500000;
  std::size_t max_terms = 5000000;
  double wall_seconds = 900.0;
};

/// Nonempty generating set of an ideal. Zero generators are dropped and
/// generators equal up to a nonzero scalar are stored once.
class IdealBasis {
 public:
  IdealBasis(RingPtr ring, std::vector<Polynomial> generators);
  explicit IdealBasis(std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_zero() const noexcept { return generators_.empty(); }

  IdealBasis in_ring(const RingPtr& target) const;
  /// SHA-256 over the canonical serialization of the sorted generators.
  std::string hash() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool reduced, RunStats stats = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return ring_->order(); }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  bool reduced() const noexcept { return reduced_; }
  const RunStats& stats() const noexcept { return stats_; }
  /// True iff the ideal is the whole ring.
  bool is_unit() const noexcept;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  std::vector<Monomial> leading_monomials() const;
  IdealBasis ideal() const { return IdealBasis(ring_, elements_); }

  /// One element per line in canonical text form.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  bool reduced_;
  RunStats stats_;
};

/// Reduced Gröbner basis of I under the ring's own order.
GroebnerBasis buchberger(const IdealBasis& ideal, const Budget& budget = {});
/// Reduced Gröbner basis of I under `order` (the basis lives in a ring with that order).
GroebnerBasis buchberger(const IdealBasis& ideal, const MonomialOrder& order, const Budget& budget = {});

/// Reduced basis of (G) + (extra). G must already be a Gröbner basis under
/// its order; pairs among its elements are not revisited. The result lives in
/// the ring of `extra`, whose order must restrict to G's order on G's variables.
GroebnerBasis extend_basis(const GroebnerBasis& known, const std::vector<Polynomial>& extra,
                           const Budget& budget = {});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

}  // namespace resint
