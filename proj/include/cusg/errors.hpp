#pragma once

#include <stdexcept>
#include <string>

namespace cusg {

enum class Err {
  Overflow,
  ParseError,
  KindMismatch,
  ElementNotInSemigroup,
  NotIncreasing,
  InvalidForSupernatural,
  NotASubsemigroup,
  EmptyLowers,
  SpaceMismatch,
  NotLowerSemicontinuous,
  BadBreakpoints,
  PointNotInSpace,
  NotClosedSubcomplex,
  GlueOrderViolation,
  NotOpen,
  MultiplicityExceeded,
  PhiNotOrdered,
  MapNotCellwiseAffine,
  PreconditionViolated,
  ConstraintViolated,
  DescriptorMismatch,
  StageMismatch,
  CannotMatchBase,
  InvalidSpec,
  Internal,
};

const char* err_name(Err e);

/// Library-wide exception; `code` identifies the failed contract.
class CuError : public std::runtime_error {
 public:
  CuError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw CuError(code, what); }

}  // namespace cusg
