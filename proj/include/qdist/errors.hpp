// Copyright 2026 The qdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDIST_ERRORS_HPP
#define QDIST_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdist {

enum class Errc {
  NonHermitianInput,
  NonSquare,
  NumericalFailure,
  NegativeEigenvalue,
  InvalidExponent,
  NotPositive,
  TraceNotOne,
  InvalidPrior,
  ParamOutOfRange,
  InvalidRank,
  ParseError,
  IoError,
  DomainError,
  DomainMismatch,
  EqualityViolation,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonHermitianInput: return "NonHermitianInput";
    case Errc::NonSquare: return "NonSquare";
    case Errc::NumericalFailure: return "NumericalFailure";
    case Errc::NegativeEigenvalue: return "NegativeEigenvalue";
    case Errc::InvalidExponent: return "InvalidExponent";
    case Errc::NotPositive: return "NotPositive";
    case Errc::TraceNotOne: return "TraceNotOne";
    case Errc::InvalidPrior: return "InvalidPrior";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::InvalidRank: return "InvalidRank";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    case Errc::DomainError: return "DomainError";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::EqualityViolation: return "EqualityViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  Errc code() const noexcept { return code_; }
  /// what() without the leading code name.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace qdist

#endif  // QDIST_ERRORS_HPP
