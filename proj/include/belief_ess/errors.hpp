// Copyright 2026 The belief-ess Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELIEF_ESS_ERRORS_HPP_
#define BELIEF_ESS_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace belief_ess {

// Shared tolerance for normalization, degeneracy and the library-wide
// "within rounding" checks.
inline constexpr double kMassTolerance = 1e-12;

// Default tie tolerance for the strict inequalities of the ESS conditions.
inline constexpr double kDefaultEssTolerance = 1e-9;

enum class Errc {
  kEmptySetAssigned,
  kNotNormalized,
  kNegativeWeight,
  kUnknownElement,
  kDuplicateLabel,
  kFrameTooLarge,
  kNonPositiveParameter,
  kNonFiniteEntry,
  kIndexOutOfRange,
  kUnknownLabel,
  kInvalidStrategy,
  kWrongFrameSize,
  kZeroSamples,
  kDegenerateGame,
  kNoMixedEss,
  kDeltaOutOfRange,
  kEmptyRoster,
  kInvalidArgument,
  kParseError,
};

inline std::string_view ErrcName(Errc code) {
  switch (code) {
    case Errc::kEmptySetAssigned: return "EmptySetAssigned";
    case Errc::kNotNormalized: return "NotNormalized";
    case Errc::kNegativeWeight: return "NegativeWeight";
    case Errc::kUnknownElement: return "UnknownElement";
    case Errc::kDuplicateLabel: return "DuplicateLabel";
    case Errc::kFrameTooLarge: return "FrameTooLarge";
    case Errc::kNonPositiveParameter: return "NonPositiveParameter";
    case Errc::kNonFiniteEntry: return "NonFiniteEntry";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kUnknownLabel: return "UnknownLabel";
    case Errc::kInvalidStrategy: return "InvalidStrategy";
    case Errc::kWrongFrameSize: return "WrongFrameSize";
    case Errc::kZeroSamples: return "ZeroSamples";
    case Errc::kDegenerateGame: return "DegenerateGame";
    case Errc::kNoMixedEss: return "NoMixedEss";
    case Errc::kDeltaOutOfRange: return "DeltaOutOfRange";
    case Errc::kEmptyRoster: return "EmptyRoster";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(ErrcName(code)) + ": " + what),
        code_(code),
        message_(what) {}

  Errc code() const noexcept { return code_; }
  // The text without the code-name prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace belief_ess

#endif  // BELIEF_ESS_ERRORS_HPP_
