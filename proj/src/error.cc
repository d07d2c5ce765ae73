// Copyright 2026 The Authors.
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

#include "lexopt/error.h"

namespace lexopt {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidWeight:
      return "InvalidWeight";
    case ErrorCode::kInvalidBase:
      return "InvalidBase";
    case ErrorCode::kUnknownElement:
      return "UnknownElement";
    case ErrorCode::kInvalidGraph:
      return "InvalidGraph";
    case ErrorCode::kInvalidSolution:
      return "InvalidSolution";
    case ErrorCode::kOracleTooLarge:
      return "OracleTooLarge";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kNotExtremeInput:
      return "NotExtremeInput";
    case ErrorCode::kNoAugmentation:
      return "NoAugmentation";
    case ErrorCode::kNotDeficientAtIndex:
      return "NotDeficientAtIndex";
    case ErrorCode::kAlreadyLexMaximal:
      return "AlreadyLexMaximal";
    case ErrorCode::kGenerationError:
      return "GenerationError";
    case ErrorCode::kInvalidParameter:
      return "InvalidParameter";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace lexopt
