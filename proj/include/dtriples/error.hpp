#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dtriples {

enum class ErrorKind {
  UnsupportedCharacteristic,
  InvalidPrime,
  NoRepresentation,
  MissingParameter,
  Domain,
  Pole,
  OutOfRange,
  UnsupportedSpec,
  DegenerateParameters,
  BaseLocus,
  NotCircularTuple,
  CorrespondenceDomain,
  Unsupported,
  Usage,
};

std::string_view error_kind_name(ErrorKind kind);

/// Exception carrying a machine-checkable kind alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedCharacteristic: return "unsupported-characteristic";
    case ErrorKind::InvalidPrime: return "invalid-prime";
    case ErrorKind::NoRepresentation: return "no-representation";
    case ErrorKind::MissingParameter: return "missing-parameter";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::UnsupportedSpec: return "unsupported-spec";
    case ErrorKind::DegenerateParameters: return "degenerate-parameters";
    case ErrorKind::BaseLocus: return "base-locus";
    case ErrorKind::NotCircularTuple: return "not-a-circular-tuple";
    case ErrorKind::CorrespondenceDomain: return "correspondence-domain";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace dtriples
