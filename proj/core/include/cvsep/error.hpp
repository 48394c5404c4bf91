// Copyright 2026 The cvsep Authors
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
#include <string_view>

namespace cvsep {

enum class ErrorCode {
  InvalidInput,
  InvalidTransform,
  DegenerateBlock,
  InvalidEnsemble,
  NotPRepresentable,
  BoundaryPRep,
  InvalidTilde,
  OutOfDomain,
  InvalidSpec,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidTransform: return "InvalidTransform";
    case ErrorCode::DegenerateBlock: return "DegenerateBlock";
    case ErrorCode::InvalidEnsemble: return "InvalidEnsemble";
    case ErrorCode::NotPRepresentable: return "NotPRepresentable";
    case ErrorCode::BoundaryPRep: return "BoundaryPRep";
    case ErrorCode::InvalidTilde: return "InvalidTilde";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cvsep
