#pragma once

#include <stdexcept>
#include <string>

namespace secdof {

// Failure classes used across the library. The CLI maps each class to a
// process exit status via exit_code_for().
enum class Errc {
  // linear algebra
  ZeroMatrix,
  DimensionMismatch,
  NotHermitian,
  NotPsd,
  Singular,
  // configuration
  InvalidAntennaCounts,
  IndivisibleStreams,
  NotApplicable,
  ParseError,
  // precoder synthesis
  TooManyStreams,
  Infeasible,
  NoFreeSpace,
  SchemeRegimeMismatch,
  // rate estimation
  InsufficientPoints,
  // wiretap codes
  NonIntegerBinStructure,
  IndexOutOfRange,
  TooLargeToEnumerate,
};

const char* errc_name(Errc code) noexcept;

// Exit statuses: 0 ok, 1 config error, 2 infeasible scheme, 3 numerical
// failure, 4 validation failure.
int exit_code_for(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace secdof
