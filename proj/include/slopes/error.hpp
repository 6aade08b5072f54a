// Copyright 2026 The slopes Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slopes {

enum class ErrorKind {
  kCoincidentPoints,
  kDuplicatePoint,
  kTooFewPoints,
  kIndexOutOfRange,
  kAllCollinear,
  kNotConvexPosition,
  kCollinearTriple,
  kRankDeficient,
  kDegenerateConic,
  kSingularPoint,
  kNoSecondIntersection,
  kOperandOffConic,
  kDegenerateInput,
  kIndexOrder,
  kLemmaViolation,
  kCollinearSource,
  kNonInvertible,
  kMTooSmall,
  kTooFewRemaining,
  kGenerationExhausted,
  kInconsistentGap,
  kInvalidSpec,
  kParseError,
  kBackendMismatch,
  kRenderTooLarge,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::kCoincidentPoints: return "CoincidentPoints";
    case ErrorKind::kDuplicatePoint: return "DuplicatePoint";
    case ErrorKind::kTooFewPoints: return "TooFewPoints";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kAllCollinear: return "AllCollinear";
    case ErrorKind::kNotConvexPosition: return "NotConvexPosition";
    case ErrorKind::kCollinearTriple: return "CollinearTriple";
    case ErrorKind::kRankDeficient: return "RankDeficient";
    case ErrorKind::kDegenerateConic: return "DegenerateConic";
    case ErrorKind::kSingularPoint: return "SingularPoint";
    case ErrorKind::kNoSecondIntersection: return "NoSecondIntersection";
    case ErrorKind::kOperandOffConic: return "OperandOffConic";
    case ErrorKind::kDegenerateInput: return "DegenerateInput";
    case ErrorKind::kIndexOrder: return "IndexOrder";
    case ErrorKind::kLemmaViolation: return "LemmaViolation";
    case ErrorKind::kCollinearSource: return "CollinearSource";
    case ErrorKind::kNonInvertible: return "NonInvertible";
    case ErrorKind::kMTooSmall: return "mTooSmall";
    case ErrorKind::kTooFewRemaining: return "TooFewRemaining";
    case ErrorKind::kGenerationExhausted: return "GenerationExhausted";
    case ErrorKind::kInconsistentGap: return "InconsistentGap";
    case ErrorKind::kInvalidSpec: return "InvalidSpec";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kBackendMismatch: return "BackendMismatch";
    case ErrorKind::kRenderTooLarge: return "RenderTooLarge";
  }
  return "Unknown";
}

// Every failure in the library is an Error. `indices` carries the witness
// (offending point indices, 0-based) when the failure has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<std::size_t> indices = {})
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind),
        indices_(std::move(indices)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> indices_;
};

}  // namespace slopes
