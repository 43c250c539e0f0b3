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

#include "dihedral/error.hpp"

namespace dihedral {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidWord: return "InvalidWord";
    case ErrorCode::kOperatorUndefined: return "OperatorUndefined";
    case ErrorCode::kAmbiguousOperator: return "AmbiguousOperator";
    case ErrorCode::kInvalidBand: return "InvalidBand";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kUnsupportedSubgroup: return "UnsupportedSubgroup";
    case ErrorCode::kQMismatch: return "QMismatch";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNotSignatureEligible: return "NotSignatureEligible";
    case ErrorCode::kCertificationFailed: return "CertificationFailed";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace dihedral
