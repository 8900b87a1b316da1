#pragma once

#include <stdexcept>
#include <string>

namespace seifertq {

// Every library failure carries a stable kind string so the CLI can report it.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define SEIFERTQ_ERROR(Name)                                          \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  };

SEIFERTQ_ERROR(InvalidArgument)
SEIFERTQ_ERROR(NonCoprime)
SEIFERTQ_ERROR(NotCoprime)
SEIFERTQ_ERROR(ParityViolation)
SEIFERTQ_ERROR(SeifertRelationViolated)
SEIFERTQ_ERROR(TooFewFibers)
SEIFERTQ_ERROR(OracleDisagreement)
SEIFERTQ_ERROR(DomainError)
SEIFERTQ_ERROR(QuadratureFailure)
SEIFERTQ_ERROR(PrecisionExhausted)
SEIFERTQ_ERROR(DegenerateColor)
SEIFERTQ_ERROR(LimitDoesNotExist)
SEIFERTQ_ERROR(RayHitsPole)
SEIFERTQ_ERROR(BranchMismatch)
SEIFERTQ_ERROR(DegreeViolation)

#undef SEIFERTQ_ERROR

}  // namespace seifertq
