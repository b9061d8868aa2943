#include "secdof/errors.hpp"

namespace secdof {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroMatrix: return "ZeroMatrix";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotPsd: return "NotPSD";
    case Errc::Singular: return "Singular";
    case Errc::InvalidAntennaCounts: return "InvalidAntennaCounts";
    case Errc::IndivisibleStreams: return "IndivisibleStreams";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::ParseError: return "ParseError";
    case Errc::TooManyStreams: return "TooManyStreams";
    case Errc::Infeasible: return "Infeasible";
    case Errc::NoFreeSpace: return "NoFreeSpace";
    case Errc::SchemeRegimeMismatch: return "SchemeRegimeMismatch";
    case Errc::InsufficientPoints: return "InsufficientPoints";
    case Errc::NonIntegerBinStructure: return "NonIntegerBinStructure";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::TooLargeToEnumerate: return "TooLargeToEnumerate";
  }
  return "Unknown";
}

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidAntennaCounts:
    case Errc::IndivisibleStreams:
    case Errc::ParseError:
    case Errc::InsufficientPoints:
      return 1;
    case Errc::Infeasible:
    case Errc::SchemeRegimeMismatch:
    case Errc::TooManyStreams:
    case Errc::NoFreeSpace:
      return 2;
    default:
      return 3;
  }
}

}  // namespace secdof
