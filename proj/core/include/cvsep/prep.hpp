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

// Gaussian P-representation: characteristic function, the Gaussian weight
// over coherent-state labels, its moments and a sampler.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cvsep/covariance.hpp"

namespace cvsep {

/// Real phase-space coordinates of a coherent-state label,
/// alpha = (alpha1 + i alpha2)/sqrt 2, beta = (beta1 + i beta2)/sqrt 2.
struct PhasePoint {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;

  Vec4 vec() const { return {alpha1, alpha2, beta1, beta2}; }
  static PhasePoint from(const Vec4& z) { return {z[0], z[1], z[2], z[3]}; }
};

/// Gaussian weight normalization * exp(-z^T P z / 2) with P = (V - I/2)^{-1}.
/// The normalization sqrt(det P)/(4 pi^2) makes the weight integrate to 1 over
/// d alpha1 d alpha2 d beta1 d beta2.
class PWeight {
 public:
  const SymMat4& pmat() const { return pmat_; }
  double normalization() const { return normalization_; }

 private:
  friend PWeight p_weight(const CovMat4& v, double tol);
  PWeight(const SymMat4& pmat, double normalization)
      : pmat_(pmat), normalization_(normalization) {}

  SymMat4 pmat_;
  double normalization_;
};

/// exp(-lambda^T V lambda / 2).
double char_fn(const CovMat4& v, const Vec4& lambda);

/// Throws NotPRepresentable if V - I/2 has an eigenvalue below -tol * scale,
/// BoundaryPRep if its smallest eigenvalue is within tol * scale of zero.
PWeight p_weight(const CovMat4& v, double tol = kDefaultTol);

double p_density(const PWeight& w, const PhasePoint& z);

/// Second moments of the weight, P^{-1}, computed by Cholesky inversion.
SymMat4 p_weight_covariance(const PWeight& w);

/// Fourier transform of the weight, int p(z) exp(i lambda^T z) d^4 z, by the
/// Gaussian integral formula. Multiplied by exp(-|lambda|^2 / 4) it
/// reproduces char_fn.
double p_fourier(const PWeight& w, const Vec4& lambda);

/// Frobenius norm of P^{-1} - (V - I/2); the two sides are computed along
/// different inversion routes.
double p_moments_identity(const CovMat4& v, double tol = kDefaultTol);

/// n i.i.d. draws from the weight. std::mt19937_64 seeded with `seed` feeds
/// std::normal_distribution; the draws are mapped through the spectral square
/// root of P^{-1}. Deterministic for a given (seed, n) within one build.
std::vector<PhasePoint> p_sample(const PWeight& w, std::size_t n, std::uint64_t seed);

}  // namespace cvsep
