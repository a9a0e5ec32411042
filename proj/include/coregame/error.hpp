// Copyright 2026 The Coregame Authors
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

#ifndef COREGAME_ERROR_HPP
#define COREGAME_ERROR_HPP

#include <stdexcept>
#include <string>

namespace coregame {

enum class ErrorKind {
  kSingular,
  kRankDeficient,
  kTooLarge,
  kInfiniteDomain,
  kUndefinedPoint,
  kInfeasibleSubprogram,
  kAssumptionViolated,
  kZeroGrandValue,
  kStatusNotOptimal,
  kCapExceeded,
  kDimensionMismatch,
  kNot3B2,
  kEmptyCore,
  kSolverStatus,
  kInvalidInput,
};

const char* error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coregame

#endif  // COREGAME_ERROR_HPP
