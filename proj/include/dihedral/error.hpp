// Copyright 2026 The Dihedral Authors
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace dihedral {

// Numeric values are shared with the C API (dh_status).
enum class ErrorCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kInvalidWord = 2,
  kOperatorUndefined = 3,
  kAmbiguousOperator = 4,
  kInvalidBand = 5,
  kNotInvertible = 6,
  kUnsupportedSubgroup = 7,
  kQMismatch = 8,
  kPreconditionViolated = 9,
  kNotSignatureEligible = 10,
  kCertificationFailed = 11,
  kUnreachable = 12,
  kUnknownSuite = 13,
  kParseError = 14,
  kInternal = 15,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dihedral
