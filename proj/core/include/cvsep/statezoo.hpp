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

// Deterministic and seeded random covariance matrices for tests, audits and
// examples.

#include <cstdint>
#include <random>
#include <variant>

#include "cvsep/covariance.hpp"

namespace cvsep::statezoo {

struct Vacuum {};
struct Thermal {
  double n1;
  double n2;
};
struct TwoModeSqueezed {
  double r;
};
struct StandardFormSpec {
  double a;
  double b;
  double c1;
  double c2;
};
/// Thermal state with symplectic eigenvalues uniform in [1/2, 3], passed
/// through a random two-mode symplectic (local Sp(2,R) factors around a
/// two-mode squeezer and a beam splitter). Always physical.
struct RandomPhysical {
  std::uint64_t seed;
};
/// I/2 plus a random positive semidefinite matrix. Always P-representable.
struct RandomSeparable {
  std::uint64_t seed;
};

using StateSpec = std::variant<Vacuum, Thermal, TwoModeSqueezed, StandardFormSpec,
                               RandomPhysical, RandomSeparable>;

/// Throws InvalidSpec for out-of-range parameters.
CovMat4 make(const StateSpec& spec);

/// rotation * diag(x, 1/x) * rotation with log x uniform in [-1, 1].
Symp2 random_symp2(std::mt19937_64& rng);

/// G G^T for a 4 x k Gaussian G (k uniform in 1..4) scaled by `scale`.
SymMat4 random_psd(std::mt19937_64& rng, double scale);

}  // namespace cvsep::statezoo
