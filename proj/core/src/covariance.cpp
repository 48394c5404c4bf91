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

#include "cvsep/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace cvsep {
namespace {

Mat4 block_diag(const Mat2& s1, const Mat2& s2) {
  Mat4 s;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      s(i, j) = s1(i, j);
      s(i + 2, j + 2) = s2(i, j);
    }
  return s;
}

SymMat2 sub_sym(const SymMat4& m, std::size_t off) {
  SymMat2 r;
  r.set(0, 0, m(off, off));
  r.set(0, 1, m(off, off + 1));
  r.set(1, 1, m(off + 1, off + 1));
  return r;
}

Mat2 sub_c(const SymMat4& m) {
  return Mat2::from_rows({m(0, 2), m(0, 3), m(1, 2), m(1, 3)});
}

bool is_symplectic(const Mat2& s) {
  const double scale = std::max(1.0, s.norm_frobenius() * s.norm_frobenius());
  return s.all_finite() && std::abs(det2(s) - 1.0) <= 1e-12 * scale;
}

}  // namespace

CovMat4 CovMat4::from_blocks(const SymMat2& a, const SymMat2& b, const Mat2& c) {
  SymMat4 v;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = i; j < 2; ++j) {
      v.set(i, j, a(i, j));
      v.set(i + 2, j + 2, b(i, j));
    }
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) v.set(i, j + 2, c(i, j));
  return CovMat4(v);
}

CovMat4 CovMat4::standard(double a, double b, double c1, double c2) {
  return from_blocks(SymMat2::diagonal({a, a}), SymMat2::diagonal({b, b}),
                     Mat2::diagonal({c1, c2}));
}

SymMat2 CovMat4::a_block() const { return sub_sym(v_, 0); }
SymMat2 CovMat4::b_block() const { return sub_sym(v_, 2); }
Mat2 CovMat4::c_block() const { return sub_c(v_); }

TildeMat::TildeMat(const SymMat4& t, double tol) : t_(t) {
  if (!t.mat().all_finite())
    throw Error(ErrorCode::InvalidTilde, "ensemble matrix has non-finite entries");
  if (!is_psd_sym(t, tol))
    throw Error(ErrorCode::InvalidTilde, "ensemble matrix is not positive semidefinite");
}

SymMat2 TildeMat::a_block() const { return sub_sym(t_, 0); }
SymMat2 TildeMat::b_block() const { return sub_sym(t_, 2); }
Mat2 TildeMat::c_block() const { return sub_c(t_); }

Symp2::Symp2(const Mat2& s) : s_(s) {
  if (!is_symplectic(s))
    throw Error(ErrorCode::InvalidTransform,
                "matrix is not in Sp(2,R): det = " + std::to_string(det2(s)));
}

Symp2 Symp2::rotation(double theta) { return Symp2(cvsep::rotation(theta), Unchecked{}); }

Symp2 Symp2::squeeze(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw Error(ErrorCode::InvalidTransform, "squeeze factor must be positive");
  return Symp2(Mat2::diagonal({x, 1.0 / x}), Unchecked{});
}

Symp2 Symp2::inverse() const {
  return Symp2(Mat2::from_rows({s_(1, 1), -s_(0, 1), -s_(1, 0), s_(0, 0)}), Unchecked{});
}

CovMat4 apply_symp(const CovMat4& v, const Symp2& s1, const Symp2& s2) {
  return CovMat4(congruence(block_diag(s1.mat(), s2.mat()), v.matrix()));
}

CovMat4 apply_symp(const CovMat4& v, const Mat2& s1, const Mat2& s2) {
  return apply_symp(v, Symp2(s1), Symp2(s2));
}

TildeMat apply_symp(const TildeMat& t, const Symp2& s1, const Symp2& s2) {
  return TildeMat(congruence(block_diag(s1.mat(), s2.mat()), t.matrix()));
}

CovMat4 flip_sign(const CovMat4& v) {
  const Mat2 s3 = Mat2::diagonal({1.0, -1.0});
  return CovMat4::from_blocks(v.a_block(), congruence(s3, v.b_block()), v.c_block() * s3);
}

StandardForm to_standard_form(const CovMat4& v) {
  // Rotate a mode block to diagonal form, then squeeze it to a multiple of
  // the identity.
  auto normalize_block = [](const SymMat2& blk, const char* name) {
    if (!(blk(0, 0) > 0.0) || !(det2(blk.mat()) >= 1e-12))
      throw Error(ErrorCode::DegenerateBlock,
                  std::string(name) + " block is not positive definite");
    const double theta = 0.5 * std::atan2(2.0 * blk(0, 1), blk(0, 0) - blk(1, 1));
    const Symp2 rot = Symp2::rotation(theta);
    const SymMat2 diag = congruence(rot.mat(), blk);
    const double alpha1 = diag(0, 0);
    const double alpha2 = diag(1, 1);
    const double x = std::pow(alpha2 / alpha1, 0.25);
    return std::pair{Symp2::squeeze(x) * rot, std::sqrt(alpha1 * alpha2)};
  };

  const auto [sa, a] = normalize_block(v.a_block(), "A");
  const auto [sb, b] = normalize_block(v.b_block(), "B");
  const Mat2 c = sa.mat() * v.c_block() * sb.mat().transpose();
  const Svd2 svd = svd2_special(c);

  return StandardForm{a, b, svd.c1, svd.c2, Symp2(svd.r1) * sa, Symp2(svd.r2) * sb};
}

PhysicalityCheck is_physical(const CovMat4& v, double tol) {
  Mat4 omega;
  for (std::size_t k = 0; k < 2; ++k) {
    omega(2 * k, 2 * k + 1) = 0.5;
    omega(2 * k + 1, 2 * k) = -0.5;
  }
  const auto r = is_psd_herm(HermMat4(v.matrix(), omega), tol);
  return {r.psd, r.min_eigenvalue};
}

TildeMat tilde_from_ensemble(std::span<const EnsembleComponent> e) {
  if (e.empty()) throw Error(ErrorCode::InvalidEnsemble, "empty ensemble");
  double total = 0.0;
  SymMat4 t;
  for (const auto& comp : e) {
    if (!std::isfinite(comp.weight) || comp.weight < 0.0)
      throw Error(ErrorCode::InvalidEnsemble, "weights must be finite and nonnegative");
    for (double x : comp.deviation)
      if (!std::isfinite(x))
        throw Error(ErrorCode::InvalidEnsemble, "non-finite mean deviation");
    total += comp.weight;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j)
        t.set(i, j, t(i, j) + comp.weight * comp.deviation[i] * comp.deviation[j]);
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw Error(ErrorCode::InvalidEnsemble, "weights must sum to 1");
  return TildeMat(t);
}

SymMat4 prep_gap_matrix(const CovMat4& v) {
  return v.matrix() - 0.5 * SymMat4::identity();
}

TildeMat tilde_from_prep(const CovMat4& v, double tol) {
  const SymMat4 w = prep_gap_matrix(v);
  if (!is_psd_sym(w, tol))
    throw Error(ErrorCode::NotPRepresentable, "V - I/2 is not positive semidefinite");
  return TildeMat(w, tol);
}

}  // namespace cvsep
