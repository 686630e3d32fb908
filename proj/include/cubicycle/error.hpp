#pragma once

#include <stdexcept>
#include <string>

namespace cubicycle {

/// Base of every error raised by the library. Each subclass names one failure
/// mode so callers can map it onto a report verdict or an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CUBICYCLE_DEFINE_ERROR(Name)          \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

CUBICYCLE_DEFINE_ERROR(MalformedEncoding);
CUBICYCLE_DEFINE_ERROR(TruncatedStream);
CUBICYCLE_DEFINE_ERROR(NotCubic);
CUBICYCLE_DEFINE_ERROR(NonPlanar);
CUBICYCLE_DEFINE_ERROR(NoSuchFace);
CUBICYCLE_DEFINE_ERROR(Acyclic);
CUBICYCLE_DEFINE_ERROR(TheoremViolation);
CUBICYCLE_DEFINE_ERROR(LoopPresent);
CUBICYCLE_DEFINE_ERROR(NotHamiltonian);
CUBICYCLE_DEFINE_ERROR(NotTwoTriangle);
CUBICYCLE_DEFINE_ERROR(UniquenessViolation);
CUBICYCLE_DEFINE_ERROR(CollisionDetected);
CUBICYCLE_DEFINE_ERROR(BudgetExceeded);

#undef CUBICYCLE_DEFINE_ERROR

}  // namespace cubicycle
