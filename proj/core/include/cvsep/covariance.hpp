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

// Two-mode covariance matrices in the (q1, p1, q2, p2) ordering with the
// vacuum normalized to I/2, local symplectic (Sp(2,R) x Sp(2,R)) action,
// reduction to the standard form and the ensemble matrix built from
// per-component mean deviations.

#include <span>
#include <vector>

#include "cvsep/matkit.hpp"

namespace cvsep {

/// Real symmetric 4x4 covariance matrix V = [[A, C], [C^T, B]].
class CovMat4 {
 public:
  explicit CovMat4(const SymMat4& v) : v_(v) {}

  static CovMat4 from_blocks(const SymMat2& a, const SymMat2& b, const Mat2& c);

  /// The four-parameter standard form diag-blocks a*I, b*I, C = diag(c1, c2).
  static CovMat4 standard(double a, double b, double c1, double c2);

  static CovMat4 vacuum() { return CovMat4(0.5 * SymMat4::identity()); }

  const SymMat4& matrix() const { return v_; }
  SymMat2 a_block() const;
  SymMat2 b_block() const;
  Mat2 c_block() const;

  double operator()(std::size_t i, std::size_t j) const { return v_(i, j); }

 private:
  SymMat4 v_;
};

/// Ensemble matrix built from component mean deviations. Positive
/// semidefinite within tolerance; construction throws InvalidTilde otherwise.
class TildeMat {
 public:
  explicit TildeMat(const SymMat4& t, double tol = kDefaultTol);

  static TildeMat zero() { return TildeMat(SymMat4{}); }

  const SymMat4& matrix() const { return t_; }
  SymMat2 a_block() const;
  SymMat2 b_block() const;
  Mat2 c_block() const;

 private:
  SymMat4 t_;
};

/// Element of Sp(2,R): a real 2x2 matrix with S J S^T = J, i.e. det S = 1.
class Symp2 {
 public:
  /// Throws InvalidTransform if det s differs from 1 by more than
  /// 1e-12 * max(1, ||s||_F^2).
  explicit Symp2(const Mat2& s);

  static Symp2 identity() { return Symp2(Mat2::identity()); }
  static Symp2 rotation(double theta);
  /// diag(x, 1/x), x > 0.
  static Symp2 squeeze(double x);

  const Mat2& mat() const { return s_; }
  Symp2 inverse() const;

  friend Symp2 operator*(const Symp2& a, const Symp2& b) {
    return Symp2(a.s_ * b.s_, Unchecked{});
  }

 private:
  struct Unchecked {};
  Symp2(const Mat2& s, Unchecked) : s_(s) {}
  Mat2 s_;
};

struct StandardForm {
  double a;
  double b;
  double c1;
  double c2;
  /// The reduction maps the input V to matrix() under (s1 (+) s2).
  Symp2 s1 = Symp2::identity();
  Symp2 s2 = Symp2::identity();

  CovMat4 matrix() const { return CovMat4::standard(a, b, c1, c2); }
};

struct EnsembleComponent {
  double weight;
  Vec4 deviation;  // <delta xi>_k in (q1, p1, q2, p2) order
};

using EnsembleSpec = std::vector<EnsembleComponent>;

/// A -> S1 A S1^T, B -> S2 B S2^T, C -> S1 C S2^T.
CovMat4 apply_symp(const CovMat4& v, const Symp2& s1, const Symp2& s2);
/// As above for raw matrices; throws InvalidTransform if either is not
/// symplectic.
CovMat4 apply_symp(const CovMat4& v, const Mat2& s1, const Mat2& s2);
TildeMat apply_symp(const TildeMat& t, const Symp2& s1, const Symp2& s2);

/// B -> S3 B S3, C -> C S3 with S3 = diag(1, -1). An involution.
CovMat4 flip_sign(const CovMat4& v);

/// Local symplectic reduction to (a, b, c1, c2) with a = sqrt(det A),
/// b = sqrt(det B), c1 >= 0, |c2| <= c1 and c1 * c2 = det C. Throws
/// DegenerateBlock if A or B is not positive definite (det < 1e-12).
StandardForm to_standard_form(const CovMat4& v);

struct PhysicalityCheck {
  bool physical;
  double min_eigenvalue;
};

/// V + (i/2) diag(J, J) >= 0 within tol.
PhysicalityCheck is_physical(const CovMat4& v, double tol = kDefaultTol);

/// sum_k P_k dxi_k dxi_k^T. Throws InvalidEnsemble for negative or
/// non-finite weights, or weights not summing to 1 within 1e-12.
TildeMat tilde_from_ensemble(std::span<const EnsembleComponent> e);

/// V - I/2; throws NotPRepresentable when that is not PSD within tol.
TildeMat tilde_from_prep(const CovMat4& v, double tol = kDefaultTol);

/// V - I/2 as a raw symmetric matrix.
SymMat4 prep_gap_matrix(const CovMat4& v);

}  // namespace cvsep
