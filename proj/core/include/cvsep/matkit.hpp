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

// Small fixed-size real and complex matrix kernels: dense N x N storage,
// symmetric wrappers, a cyclic Jacobi eigensolver, PSD tests and the 2x2
// rotation factorization used by the standard-form reduction.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>

#include "cvsep/error.hpp"

namespace cvsep {

/// Default PSD tolerance, relative to max(1, max row sum).
inline constexpr double kDefaultTol = 1e-10;

/// Off-diagonal Frobenius threshold (relative) at which Jacobi sweeps stop.
inline constexpr double kJacobiTol = 1e-14;

template <std::size_t N>
using Vec = std::array<double, N>;
using Vec2 = Vec<2>;
using Vec4 = Vec<4>;
using CVec4 = std::array<std::complex<double>, 4>;

/// Dense row-major N x N real matrix with value semantics.
template <std::size_t N>
class Mat {
 public:
  constexpr Mat() : data_{} {}

  static constexpr Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr Mat diagonal(const Vec<N>& d) {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  /// Row-major initialization from exactly N*N values.
  static constexpr Mat from_rows(const std::array<double, N * N>& rows) {
    Mat m;
    m.data_ = rows;
    return m;
  }

  constexpr double operator()(std::size_t i, std::size_t j) const {
    return data_[i * N + j];
  }
  constexpr double& operator()(std::size_t i, std::size_t j) {
    return data_[i * N + j];
  }

  constexpr const std::array<double, N * N>& data() const { return data_; }

  constexpr Mat transpose() const {
    Mat t;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  constexpr Mat& operator+=(const Mat& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  constexpr Mat& operator-=(const Mat& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  constexpr Mat& operator*=(double s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend constexpr Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend constexpr Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend constexpr Mat operator*(Mat a, double s) { return a *= s; }
  friend constexpr Mat operator*(double s, Mat a) { return a *= s; }
  friend constexpr Mat operator-(Mat a) { return a *= -1.0; }

  friend constexpr Mat operator*(const Mat& a, const Mat& b) {
    Mat c;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const double aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend constexpr Vec<N> operator*(const Mat& a, const Vec<N>& v) {
    Vec<N> r{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

  friend constexpr bool operator==(const Mat&, const Mat&) = default;

  /// Maximum absolute row sum (the infinity norm).
  double norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < N; ++j) row += std::abs((*this)(i, j));
      best = std::max(best, row);
    }
    return best;
  }

  double norm_frobenius() const {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
  }

  bool all_finite() const {
    for (double x : data_)
      if (!std::isfinite(x)) return false;
    return true;
  }

 private:
  std::array<double, N * N> data_;
};

using Mat2 = Mat<2>;
using Mat4 = Mat<4>;

/// Real symmetric N x N matrix. Writes go through set(), which mirrors, so
/// entry(i,j) == entry(j,i) holds bit-exactly.
template <std::size_t N>
class Sym {
 public:
  constexpr Sym() = default;

  /// Adopts m if it is exactly symmetric; throws InvalidInput otherwise.
  static Sym from(const Mat<N>& m) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j)
        if (m(i, j) != m(j, i))
          throw Error(ErrorCode::InvalidInput, "matrix is not symmetric");
    Sym s;
    s.m_ = m;
    return s;
  }

  /// (m + m^T) / 2.
  static constexpr Sym symmetrized(const Mat<N>& m) {
    Sym s;
    for (std::size_t i = 0; i < N; ++i) {
      s.m_(i, i) = m(i, i);
      for (std::size_t j = i + 1; j < N; ++j) {
        const double v = 0.5 * (m(i, j) + m(j, i));
        s.m_(i, j) = v;
        s.m_(j, i) = v;
      }
    }
    return s;
  }

  static constexpr Sym identity() { return symmetrized(Mat<N>::identity()); }
  static constexpr Sym diagonal(const Vec<N>& d) {
    return symmetrized(Mat<N>::diagonal(d));
  }

  constexpr double operator()(std::size_t i, std::size_t j) const {
    return m_(i, j);
  }

  constexpr void set(std::size_t i, std::size_t j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }

  constexpr const Mat<N>& mat() const { return m_; }

  friend constexpr Sym operator+(const Sym& a, const Sym& b) {
    Sym s;
    s.m_ = a.m_ + b.m_;
    return s;
  }
  friend constexpr Sym operator-(const Sym& a, const Sym& b) {
    Sym s;
    s.m_ = a.m_ - b.m_;
    return s;
  }
  friend constexpr Sym operator*(double k, const Sym& a) {
    Sym s;
    s.m_ = a.m_ * k;
    return s;
  }
  friend constexpr bool operator==(const Sym&, const Sym&) = default;

  /// Quadratic form x^T M x.
  constexpr double quad(const Vec<N>& x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) s += x[i] * m_(i, j) * x[j];
    return s;
  }

 private:
  Mat<N> m_{};
};

using SymMat2 = Sym<2>;
using SymMat4 = Sym<4>;

/// S M S^T, which is symmetric whenever M is; the result is re-symmetrized to
/// remove rounding asymmetry.
template <std::size_t N>
Sym<N> congruence(const Mat<N>& s, const Sym<N>& m) {
  return Sym<N>::symmetrized(s * m.mat() * s.transpose());
}

/// Hermitian 4x4 matrix X + iY stored as a symmetric real part and an
/// antisymmetric imaginary part.
class HermMat4 {
 public:
  /// Throws InvalidInput unless imag is exactly antisymmetric.
  HermMat4(const SymMat4& real, const Mat4& imag);

  const SymMat4& real() const { return re_; }
  const Mat4& imag() const { return im_; }

  /// The real symmetric 8x8 embedding [[X, -Y], [Y, X]].
  Sym<8> real_embedding() const;

 private:
  SymMat4 re_;
  Mat4 im_;
};

template <std::size_t N>
struct EigenResult {
  Vec<N> values;   // ascending
  Mat<N> vectors;  // column k pairs with values[k]
};

/// Full spectral decomposition by cyclic Jacobi sweeps. Sweeps stop once the
/// off-diagonal Frobenius norm falls below tol times the Frobenius norm of m.
/// Throws InvalidInput for non-finite entries.
template <std::size_t N>
EigenResult<N> eig_sym(const Sym<N>& m, double tol = kJacobiTol);

extern template EigenResult<2> eig_sym<2>(const Sym<2>&, double);
extern template EigenResult<4> eig_sym<4>(const Sym<4>&, double);
extern template EigenResult<8> eig_sym<8>(const Sym<8>&, double);

/// Scale used for relative PSD tolerances: max(1, max row sum).
template <std::size_t N>
double psd_scale(const Mat<N>& m) {
  return std::max(1.0, m.norm_inf());
}

/// min eigenvalue >= -tol * max(1, ||M||_inf).
bool is_psd_sym(const SymMat4& m, double tol = kDefaultTol);

struct HermPsdResult {
  bool psd;
  double min_eigenvalue;
  CVec4 witness;  // unit eigenvector of min_eigenvalue
};

/// PSD test for a Hermitian matrix through its real 8x8 embedding.
HermPsdResult is_psd_herm(const HermMat4& m, double tol = kDefaultTol);

/// Hermitian eigenvalues (ascending) read off the embedding spectrum, which
/// carries every eigenvalue twice.
Vec4 eigvals_herm(const HermMat4& m);

/// Rotation [[cos t, sin t], [-sin t, cos t]].
Mat2 rotation(double theta);

/// The symplectic form J = [[0, 1], [-1, 0]].
inline constexpr Mat2 kJ = Mat2::from_rows({0.0, 1.0, -1.0, 0.0});

inline double det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

/// Determinant by partial-pivot LU.
template <std::size_t N>
double determinant(const Mat<N>& m) {
  Mat<N> lu = m;
  double det = 1.0;
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < N; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
    if (lu(p, k) == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < N; ++j) std::swap(lu(k, j), lu(p, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < N; ++i) {
      const double f = lu(i, k) / lu(k, k);
      for (std::size_t j = k; j < N; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

/// Inverse of a symmetric positive-definite matrix through its Cholesky
/// factor; nullopt if the factorization breaks down.
std::optional<SymMat4> cholesky_inverse(const SymMat4& m);

struct Svd2 {
  Mat2 r1;  // proper rotation
  Mat2 r2;  // proper rotation
  double c1;
  double c2;
};

/// r1 * c * r2^T = diag(c1, c2) with c1 >= 0, |c2| <= c1 and
/// sign(c1 * c2) == sign(det c).
Svd2 svd2_special(const Mat2& c);

}  // namespace cvsep
