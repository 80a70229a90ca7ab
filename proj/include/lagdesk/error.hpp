#pragma once
#include <stdexcept>
#include <string>

namespace lagdesk {

// Every contract violation in the library throws Error with a stable code.
// Codes are part of the public interface; messages are for humans.
enum class ErrorCode {
  RankDeficient,
  NotIsotropic,
  SpaceMismatch,
  NotSymmetric,
  NotSymplectic,
  ChartViolation,
  BaseMismatch,
  NonIntegralDegree,
  CleanViolation,
  DegenerateNormalHessian,
  MissingGrading,
  BoundaryNotSquareZero,
  TooCoarse,
  BadWindow,
  NotNormalForm,
  BadInterval,
  InconsistentComponentData,
  UnsupportedRHS,
  NoStabilization,
  BadScenario,
  BadInput,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace lagdesk
