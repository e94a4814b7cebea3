// errors.hpp
// Typed exceptions for the affqis library. Every failure mode carries a
// stable code so the CLI can map it to a distinct exit status.

#pragma once

#include <stdexcept>
#include <string>

namespace affqis {

enum class ErrorCode {
  NotHermitian,
  NotPSD,
  TraceNotOne,
  DimensionMismatch,
  BadSubsystemIndex,
  NotBipartite,
  BadRank,
  BlochOutOfBall,
  DegenerateState,
  DegenerateSpectrum,
  NotHermitianObservable,
  IncompleteKraus,
  BadSchmidtSpectrum,
  OptimizationFailed,
  InternalConsistency,
  ParseError,
  BadGrid,
  VerificationFailed,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace affqis
