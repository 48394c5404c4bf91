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

#include "cvsep/statezoo.hpp"

#include <cmath>
#include <numbers>

namespace cvsep::statezoo {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool finite(std::initializer_list<double> xs) {
  for (double x : xs)
    if (!std::isfinite(x)) return false;
  return true;
}

// Two-mode squeezer [[cosh r I, sinh r Z], [sinh r Z, cosh r I]], Z = diag(1,-1).
Mat4 two_mode_squeezer(double r) {
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  return Mat4::from_rows({ch, 0, sh, 0,
                          0, ch, 0, -sh,
                          sh, 0, ch, 0,
                          0, -sh, 0, ch});
}

Mat4 beam_splitter(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Mat4::from_rows({c, 0, s, 0,
                          0, c, 0, s,
                          -s, 0, c, 0,
                          0, -s, 0, c});
}

Mat4 local(const Symp2& s1, const Symp2& s2) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = s1.mat()(i, j);
      m(i + 2, j + 2) = s2.mat()(i, j);
    }
  return m;
}

CovMat4 random_physical(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> nu(0.5, 3.0);
  std::uniform_real_distribution<double> squeeze(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double n1 = nu(rng);
  const double n2 = nu(rng);
  const SymMat4 thermal = SymMat4::diagonal({n1, n1, n2, n2});
  const Mat4 inner = local(random_symp2(rng), random_symp2(rng));
  const Mat4 mix = two_mode_squeezer(squeeze(rng)) * beam_splitter(angle(rng));
  const Mat4 outer = local(random_symp2(rng), random_symp2(rng));
  return CovMat4(congruence(outer * mix * inner, thermal));
}

CovMat4 random_separable(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> scale(0.2, 1.5);
  const double s = scale(rng);
  return CovMat4(0.5 * SymMat4::identity() + random_psd(rng, s));
}

}  // namespace

Symp2 random_symp2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> log_x(-1.0, 1.0);
  const double t1 = angle(rng);
  const double x = std::exp(log_x(rng));
  const double t2 = angle(rng);
  return Symp2::rotation(t1) * Symp2::squeeze(x) * Symp2::rotation(t2);
}

SymMat4 random_psd(std::mt19937_64& rng, double scale) {
  std::uniform_int_distribution<int> rank(1, 4);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int k = rank(rng);
  SymMat4 out;
  for (int c = 0; c < k; ++c) {
    Vec4 col;
    for (double& x : col) x = scale * normal(rng);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) out.set(i, j, out(i, j) + col[i] * col[j]);
  }
  return out;
}

CovMat4 make(const StateSpec& spec) {
  return std::visit(
      overloaded{
          [](const Vacuum&) { return CovMat4::vacuum(); },
          [](const Thermal& s) {
            if (!finite({s.n1, s.n2}) || s.n1 < 0.5 || s.n2 < 0.5)
              throw Error(ErrorCode::InvalidSpec, "thermal occupations must be >= 1/2");
            return CovMat4(SymMat4::diagonal({s.n1, s.n1, s.n2, s.n2}));
          },
          [](const TwoModeSqueezed& s) {
            if (!finite({s.r}) || s.r < 0.0)
              throw Error(ErrorCode::InvalidSpec, "squeezing r must be >= 0");
            const double a = 0.5 * std::cosh(2.0 * s.r);
            const double c = 0.5 * std::sinh(2.0 * s.r);
            return CovMat4::standard(a, a, c, -c);
          },
          [](const StandardFormSpec& s) {
            if (!finite({s.a, s.b, s.c1, s.c2}) || s.a <= 0.0 || s.b <= 0.0)
              throw Error(ErrorCode::InvalidSpec, "standard form needs finite a, b > 0");
            return CovMat4::standard(s.a, s.b, s.c1, s.c2);
          },
          [](const RandomPhysical& s) { return random_physical(s.seed); },
          [](const RandomSeparable& s) { return random_separable(s.seed); },
      },
      spec);
}

}  // namespace cvsep::statezoo
