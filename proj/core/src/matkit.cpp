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

#include "cvsep/matkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cvsep {

HermMat4::HermMat4(const SymMat4& real, const Mat4& imag) : re_(real), im_(imag) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      if (imag(i, j) != -imag(j, i))
        throw Error(ErrorCode::InvalidInput,
                    "imaginary part of a Hermitian matrix must be antisymmetric");
}

Sym<8> HermMat4::real_embedding() const {
  Mat<8> e;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      e(i, j) = re_(i, j);
      e(i + 4, j + 4) = re_(i, j);
      e(i, j + 4) = -im_(i, j);
      e(i + 4, j) = im_(i, j);
    }
  return Sym<8>::from(e);
}

template <std::size_t N>
EigenResult<N> eig_sym(const Sym<N>& m, double tol) {
  if (!m.mat().all_finite())
    throw Error(ErrorCode::InvalidInput, "eig_sym: non-finite matrix entry");

  Mat<N> a = m.mat();
  Mat<N> v = Mat<N>::identity();
  const double scale = a.norm_frobenius();

  auto off_norm = [&a] {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_norm();
    if (off == 0.0 || off <= tol * scale) break;

    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenResult<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < N; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

template EigenResult<2> eig_sym<2>(const Sym<2>&, double);
template EigenResult<4> eig_sym<4>(const Sym<4>&, double);
template EigenResult<8> eig_sym<8>(const Sym<8>&, double);

bool is_psd_sym(const SymMat4& m, double tol) {
  const auto eig = eig_sym(m);
  return eig.values[0] >= -tol * psd_scale(m.mat());
}

HermPsdResult is_psd_herm(const HermMat4& m, double tol) {
  const auto eig = eig_sym(m.real_embedding());
  HermPsdResult r;
  r.min_eigenvalue = eig.values[0];
  // Scale of the Hermitian matrix bounded by the row sums of both parts.
  const double scale = std::max(1.0, m.real().mat().norm_inf() + m.imag().norm_inf());
  r.psd = r.min_eigenvalue >= -tol * scale;
  for (std::size_t i = 0; i < 4; ++i)
    r.witness[i] = {eig.vectors(i, 0), eig.vectors(i + 4, 0)};
  return r;
}

Vec4 eigvals_herm(const HermMat4& m) {
  const auto eig = eig_sym(m.real_embedding());
  Vec4 out;
  for (std::size_t k = 0; k < 4; ++k)
    out[k] = 0.5 * (eig.values[2 * k] + eig.values[2 * k + 1]);
  return out;
}

Mat2 rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Mat2::from_rows({c, s, -s, c});
}

std::optional<SymMat4> cholesky_inverse(const SymMat4& m) {
  Mat4 l;
  for (std::size_t j = 0; j < 4; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) return std::nullopt;
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < 4; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  // Forward substitution for L^{-1}, column by column.
  Mat4 linv;
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t i = c; i < 4; ++i) {
      double s = (i == c) ? 1.0 : 0.0;
      for (std::size_t k = c; k < i; ++k) s -= l(i, k) * linv(k, c);
      linv(i, c) = s / l(i, i);
    }
  }
  return SymMat4::symmetrized(linv.transpose() * linv);
}

Svd2 svd2_special(const Mat2& c) {
  // c = Rot(phi) diag(sx, sy) Rot(theta) with Rot(x) the counter-clockwise
  // rotation; rotation(x) in this file is Rot(-x).
  const double e = 0.5 * (c(0, 0) + c(1, 1));
  const double f = 0.5 * (c(0, 0) - c(1, 1));
  const double g = 0.5 * (c(1, 0) + c(0, 1));
  const double h = 0.5 * (c(1, 0) - c(0, 1));
  const double q = std::hypot(e, h);
  const double r = std::hypot(f, g);
  const double a1 = std::atan2(g, f);
  const double a2 = std::atan2(h, e);
  const double theta = 0.5 * (a2 - a1);
  const double phi = 0.5 * (a2 + a1);
  return Svd2{rotation(phi), rotation(-theta), q + r, q - r};
}

}  // namespace cvsep
