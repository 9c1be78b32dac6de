#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resint {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RESINT_DEFINE_ERROR(Name)            \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

RESINT_DEFINE_ERROR(IncompatibleField);
RESINT_DEFINE_ERROR(IncompatibleRing);
RESINT_DEFINE_ERROR(ZeroPolynomial);
RESINT_DEFINE_ERROR(BadRowSet);
RESINT_DEFINE_ERROR(BadIndex);
RESINT_DEFINE_ERROR(NotIncomparable);
RESINT_DEFINE_ERROR(BadShape);
RESINT_DEFINE_ERROR(BadColon);
RESINT_DEFINE_ERROR(BadAssignment);
RESINT_DEFINE_ERROR(BadPluecker);
RESINT_DEFINE_ERROR(StructureViolation);
RESINT_DEFINE_ERROR(NotDivisible);
RESINT_DEFINE_ERROR(IoError);

#undef RESINT_DEFINE_ERROR

/// Counters describing how far a Gröbner run got before it was cut off.
struct RunStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_discarded = 0;
  std::size_t max_terms = 0;
  std::size_t basis_size = 0;
  double wall_seconds = 0.0;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, RunStats stats)
      : Error("BudgetExceeded: " + what), stats_(stats) {}

  const RunStats& stats() const noexcept { return stats_; }

 private:
  RunStats stats_;
};

}  // namespace resint
