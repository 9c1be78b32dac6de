#pragma once

#include <map>
#include <vector>

#include "resint/ideal_ops.hpp"
#include "resint/labels.hpp"
#include "resint/poset.hpp"

namespace resint {

/// The generic residual intersection RI(m, y) = I_n(X) + (Xy) with its
/// generators realized in the PaperLex ring over `field`.
struct ResidualInstance {
  int m = 0;
  int n = 0;
  RingPtr ring;
  std::vector<GeneratorLabel> labels;  // canonical order
  std::map<GeneratorLabel, Polynomial> polynomials;

  const Polynomial& at(const GeneratorLabel& label) const;
  std::vector<Polynomial> generators() const;
  IdealBasis ideal() const { return IdealBasis(ring, generators()); }
};

/// Throws BadShape unless m >= n >= 1.
ResidualInstance build_instance(int m, int n, Field field = Field::rationals());

/// Rank sums of B for n >= 2; the variables x[1][1..m][1] for n = 1.
std::vector<Polynomial> hsop(const ResidualInstance& instance);
/// Labels summed into each hsop element (one singleton per x variable when n = 1).
std::vector<std::vector<GeneratorLabel>> hsop_classes(int m, int n);
inline std::vector<std::vector<GeneratorLabel>> hsop_classes(const ResidualInstance& instance) {
  return hsop_classes(instance.m, instance.n);
}

struct VerifyOptions {
  Field field = Field::prime();
  Budget budget;
  unsigned jobs = 1;
};

struct GeneratorCheck {
  GeneratorLabel generator;
  bool verdict = false;
  bool ideal_member = false;  // settled without the slack-variable run
  TraceRecord trace;
};

struct HsopCertificate {
  int m = 0;
  int n = 0;
  std::string field;
  std::vector<Polynomial> hsop;
  bool hsop_in_ideal = false;  // each element is a sum of listed generators
  std::vector<GeneratorCheck> checks;
  bool complete = false;
  bool verdict = false;
};

/// Budget exhausted part-way through a certificate; carries what was done.
class CertificateIncomplete : public BudgetExceeded {
 public:
  CertificateIncomplete(const BudgetExceeded& cause, HsopCertificate partial)
      : BudgetExceeded(cause), partial_(std::move(partial)) {}
  const HsopCertificate& partial() const noexcept { return partial_; }

 private:
  HsopCertificate partial_;
};

/// √(hsop) = √(RI): the hsop lies in RI by construction, and every generator
/// of RI is tested for membership in √(hsop) over options.field.
HsopCertificate verify_ara_witness(const ResidualInstance& instance, const VerifyOptions& options = {});

/// (Q_1..Q_m) : (y_1..y_n) equals RI as an ideal.
bool verify_colon_identity(const ResidualInstance& instance, const VerifyOptions& options = {},
                           TraceRecord* trace = nullptr);

struct Specialization {
  RingPtr ring;
  std::vector<std::pair<GeneratorLabel, Polynomial>> generators;
  std::vector<Polynomial> hsop;

  IdealBasis ideal() const;
  const Polynomial& at(const GeneratorLabel& label) const;
};

/// Substitutes every x and y of the instance (BadAssignment if one is missing).
Specialization specialize(const ResidualInstance& instance, const std::map<VariableId, Polynomial>& assignment,
                          const RingPtr& target);

struct UpperBoundRow {
  int m = 0;
  int n = 0;
  int naive = 0;       // (mn - n^2 + 1) + m
  int rank_sum = 0;    // n(m - n + 1) + 1
  int difference = 0;  // naive - rank_sum, always m - n
};

/// All 1 <= n <= m with 2 <= m <= max_m; throws BadShape if max_m < 2 and
/// StructureViolation if a difference is not m - n.
std::vector<UpperBoundRow> upper_bound_table(int max_m);

}  // namespace resint
