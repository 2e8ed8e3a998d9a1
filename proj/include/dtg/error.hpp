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

#ifndef DTG_ERROR_HPP_
#define DTG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtg {

enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  kVertexOutOfRange,
  kCycleDetected,
  kDuplicateEdge,
  kSelfLoop,
  kInvalidThresholds,
  kMissingVertex,
  kNotSimple,
  kWrongStepKind,
  kDegenerateInput,
  kInvalidFactor,
  kNonpositiveWeight,
  kTooLarge,
  kBadParams,
  kOverflow,
  kInternal,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported by throwing Error. `detail` carries
// structured payload where one exists: the vertices of a directed cycle for
// kCycleDetected, the offending step index for kWrongStepKind, the line
// number for kParseError.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<long long> detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::vector<long long>& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::vector<long long> detail_;
};

// Raised for violated internal invariants (never for bad input).
[[noreturn]] void internal_error(const std::string& what);

}  // namespace dtg

#endif  // DTG_ERROR_HPP_
