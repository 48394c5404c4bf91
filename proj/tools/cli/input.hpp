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

// Input document for the CLI (JSON, schema version 1):
//
//   {
//     "version": 1,                                   optional, must be 1
//     "matrix": [[..4..], [..4..], [..4..], [..4..]],  or a flat list of 16
//     "standard_form": {"a": .., "b": .., "c1": .., "c2": ..},
//     "tol": 1e-10                                    optional, > 0
//   }
//
// Exactly one of "matrix" and "standard_form" must be present. Matrices that
// are asymmetric by at most 1e-9 are symmetrized with a warning; larger
// asymmetry is rejected.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cvsep/covariance.hpp"

namespace cvsep::cli {

inline constexpr int kInputSchemaVersion = 1;
inline constexpr double kSymmetryTol = 1e-9;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputDocument {
  CovMat4 covariance;
  bool from_standard_form = false;
  std::optional<double> tol;
  std::vector<std::string> warnings;
};

InputDocument parse_input(std::string_view text);

/// Reads and parses a file; throws ParseError if it cannot be read.
InputDocument load_input(const std::string& path);

}  // namespace cvsep::cli
