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

#include "cvsep/prep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace cvsep {

double char_fn(const CovMat4& v, const Vec4& lambda) {
  return std::exp(-0.5 * v.matrix().quad(lambda));
}

PWeight p_weight(const CovMat4& v, double tol) {
  const SymMat4 w = prep_gap_matrix(v);
  const auto eig = eig_sym(w);
  const double scale = psd_scale(w.mat());
  if (eig.values[0] < -tol * scale)
    throw Error(ErrorCode::NotPRepresentable, "V - I/2 is not positive semidefinite");
  if (eig.values[0] <= tol * scale)
    throw Error(ErrorCode::BoundaryPRep,
                "V - I/2 is singular; the weight is a degenerate Gaussian");

  Mat4 p;
  double det_inv = 1.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const double inv = 1.0 / eig.values[k];
    det_inv *= eig.values[k];
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        p(i, j) += eig.vectors(i, k) * inv * eig.vectors(j, k);
  }
  constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;
  return PWeight(SymMat4::symmetrized(p), 1.0 / (kFourPiSq * std::sqrt(det_inv)));
}

double p_density(const PWeight& w, const PhasePoint& z) {
  return w.normalization() * std::exp(-0.5 * w.pmat().quad(z.vec()));
}

SymMat4 p_weight_covariance(const PWeight& w) {
  auto inv = cholesky_inverse(w.pmat());
  if (!inv) throw Error(ErrorCode::NotPRepresentable, "weight matrix is not positive definite");
  return *inv;
}

double p_fourier(const PWeight& w, const Vec4& lambda) {
  constexpr double kTwoPiSq = 4.0 * std::numbers::pi * std::numbers::pi;
  const double mass = w.normalization() * kTwoPiSq / std::sqrt(determinant(w.pmat().mat()));
  return mass * std::exp(-0.5 * p_weight_covariance(w).quad(lambda));
}

double p_moments_identity(const CovMat4& v, double tol) {
  const PWeight w = p_weight(v, tol);
  return (p_weight_covariance(w) - prep_gap_matrix(v)).mat().norm_frobenius();
}

std::vector<PhasePoint> p_sample(const PWeight& w, std::size_t n, std::uint64_t seed) {
  const auto eig = eig_sym(w.pmat());
  Mat4 root;
  for (std::size_t k = 0; k < 4; ++k) {
    const double s = 1.0 / std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        root(i, j) += eig.vectors(i, k) * s * eig.vectors(j, k);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<PhasePoint> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec4 xi;
    for (double& x : xi) x = normal(rng);
    out.push_back(PhasePoint::from(root * xi));
  }
  return out;
}

}  // namespace cvsep
