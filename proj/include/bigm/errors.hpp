// Copyright 2026 bigm developers
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

namespace bigm {

enum class ErrorCode {
  DuplicateName,
  InvertedBounds,
  UnknownVar,
  DuplicateTerm,
  MissingValue,
  NotBinary,
  BadK,
  InvalidSpec,
  BadStep,
  UnknownKernel,
  NotOneHot,
  PartialMapping,
  SearchSpaceTooLarge,
  NumericalFailure,
  ParseError,
  ValidationError,
  IoError,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying one of the library error codes. All throwing entry
/// points document which codes they can raise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace bigm
