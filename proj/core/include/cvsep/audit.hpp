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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cvsep/matkit.hpp"

namespace cvsep {

struct AuditOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
};

/// Outcome of a randomized check of the implication chain
///   P-representable => stringent => Simon => Duan
/// (and stringent(V, T) => weak_gap(V, T, +-1) for each ensemble matrix T).
struct AuditReport {
  std::size_t samples = 0;
  std::size_t implications_checked = 0;
  std::size_t counterexamples = 0;
  std::vector<std::string> counterexample_log;  // first few, for diagnostics

  std::size_t p_representable = 0;
  std::size_t entangled = 0;           // Simon violated
  std::size_t stringent_strict = 0;    // Simon holds, stringent(V, T) fails
  std::size_t stringent_trials = 0;    // stringent checks with T != 0
  std::size_t simon_strict = 0;        // Duan holds, Simon fails
  std::size_t bound_disagreements = 0; // P-representation bound vs Simon
};

/// Alternates RandomPhysical and RandomSeparable states (every fourth
/// separable one is also passed through a random local symplectic pair). For
/// each state the ensemble matrices tried are 0, V - I/2 when it is PSD, a
/// random PSD matrix scaled to stay below V - I/2, and an unconstrained random
/// PSD matrix.
AuditReport run_hierarchy_audit(const AuditOptions& opts);

}  // namespace cvsep
