// Copyright 2026 The dtg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dtg/error.hpp"

namespace dtg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kInvalidThresholds: return "InvalidThresholds";
    case ErrorCode::kMissingVertex: return "MissingVertex";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kWrongStepKind: return "WrongStepKind";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kInvalidFactor: return "InvalidFactor";
    case ErrorCode::kNonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

void internal_error(const std::string& what) {
  throw Error(ErrorCode::kInternal, "internal invariant violated: " + what);
}

}  // namespace dtg
