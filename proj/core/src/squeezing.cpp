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

#include "cvsep/squeezing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cvsep {
namespace {

// Slack for values that are exact analytically but computed in floating point
// (r at its range endpoints, radicand factors at the vacuum edge).
constexpr double kRoundoff = 1e-12;

void require_mode_params(double a, double b, const char* where) {
  if (!(a >= 0.5) || !(b >= 0.5) || !std::isfinite(a) || !std::isfinite(b))
    throw Error(ErrorCode::OutOfDomain, std::string(where) + ": requires a, b >= 1/2");
}

void require_ratio(double t, const char* where) {
  if (!(t >= 0.0 && t <= 1.0))
    throw Error(ErrorCode::OutOfDomain, std::string(where) + ": requires 0 <= t <= 1");
}

double clamp_factor(double x, const char* where) {
  if (x < -kRoundoff)
    throw Error(ErrorCode::OutOfDomain,
                std::string(where) + ": negative radicand for these squeezing factors");
  return std::max(x, 0.0);
}

}  // namespace

SqueezeParams::SqueezeParams(double r1, double r2) : r1_(r1), r2_(r2) {
  if (!std::isfinite(r1) || !std::isfinite(r2) || r1 < 1.0 || r2 < 1.0)
    throw Error(ErrorCode::OutOfDomain, "squeezing factors must satisfy r >= 1");
}

CovMat4 apply_squeeze(const StandardForm& sf, const SqueezeParams& p) {
  const double r1 = p.r1();
  const double r2 = p.r2();
  const double g = std::sqrt(r1 * r2);
  return CovMat4::from_blocks(SymMat2::diagonal({sf.a * r1, sf.a / r1}),
                              SymMat2::diagonal({sf.b * r2, sf.b / r2}),
                              Mat2::diagonal({sf.c1 * g, sf.c2 / g}));
}

std::pair<Symp2, Symp2> squeeze_symplectics(const SqueezeParams& p) {
  return {Symp2::squeeze(std::sqrt(p.r1())), Symp2::squeeze(std::sqrt(p.r2()))};
}

PrepConditions prep_conditions(const StandardForm& sf, const SqueezeParams& p, double tol) {
  const double r1 = p.r1();
  const double r2 = p.r2();
  auto geq = [tol](double lhs, double rhs) {
    return lhs >= rhs - tol * std::max(1.0, std::abs(rhs));
  };
  const double qa = sf.a - 0.5 / r1;
  const double qb = sf.b - 0.5 / r2;
  const double pa = sf.a - 0.5 * r1;
  const double pb = sf.b - 0.5 * r2;
  return PrepConditions{geq(qa * qb, sf.c1 * sf.c1), geq(pa * pb, sf.c2 * sf.c2),
                        geq(qa + qb, 0.0), geq(pa + pb, 0.0)};
}

SqueezeSolution optimal_squeeze(double a, double b, double t) {
  require_mode_params(a, b, "optimal_squeeze");
  require_ratio(t, "optimal_squeeze");

  const double u = 1.0 - t * t;
  const double d = a * a * b * b * u * u + t * (a + b * t) * (a * t + b);
  const double sd = std::sqrt(d);
  const double num = a * b * u + sd;
  // Both factors lie in [1, 2a] x [1, 2b]; clamp the last-ulp excursions.
  const double r1 = std::clamp(num / (a * t + b), 1.0, 2.0 * a);
  const double r2 = std::clamp(num / (a + b * t), 1.0, 2.0 * b);

  const double x = 2.0 * a * b * (1.0 + t * t) + t;
  const double bound =
      0.5 * std::sqrt((4.0 * a * a - 1.0) * (4.0 * b * b - 1.0) / (x + 2.0 * sd));
  return SqueezeSolution{SqueezeParams(r1, r2), d, bound, t * bound, t};
}

double prep_bound_closed_form(double a, double b, double t) {
  require_mode_params(a, b, "prep_bound_closed_form");
  require_ratio(t, "prep_bound_closed_form");
  if (t == 0.0) {
    const SqueezeParams p = optimal_squeeze(a, b, 0.0).params;
    return std::sqrt(clamp_factor(a * p.r1() - 0.5, "prep_bound_closed_form") *
                     clamp_factor(b * p.r2() - 0.5, "prep_bound_closed_form") /
                     (p.r1() * p.r2()));
  }
  const double d =
      a * a * b * b * (1.0 - t * t) * (1.0 - t * t) + t * (a + b * t) * (a * t + b);
  const double x = 2.0 * a * b * (1.0 + t * t) + t;
  return std::sqrt(std::max(0.0, x - 2.0 * std::sqrt(d))) / (2.0 * t);
}

ExtremalityResidual extremality_residual(double a, double b, const SqueezeParams& p) {
  if (a - 0.5 <= kRoundoff || b - 0.5 <= kRoundoff) return {0.0, true};
  const double r1 = p.r1();
  const double r2 = p.r2();
  const double den1 = a / r1 - 0.5;
  const double den2 = b / r2 - 0.5;
  if (std::abs(den1) <= kRoundoff || std::abs(den2) <= kRoundoff)
    return {r2 - r2_of_r1(a, b, std::min(r1, 2.0 * a)), true};
  return {(a * r1 - 0.5) / den1 - (b * r2 - 0.5) / den2, false};
}

double r2_of_r1(double a, double b, double r1) {
  if (!(a > 0.5) || !(b >= 0.5))
    throw Error(ErrorCode::OutOfDomain, "r2_of_r1: requires a > 1/2 and b >= 1/2");
  if (!(r1 >= 1.0 - kRoundoff && r1 <= 2.0 * a * (1.0 + kRoundoff)))
    throw Error(ErrorCode::OutOfDomain, "r2_of_r1: r1 must lie in [1, 2a]");
  r1 = std::clamp(r1, 1.0, 2.0 * a);
  const double x = (2.0 * a / r1 - 1.0) / (2.0 * a * r1 - 1.0);
  const double w = 1.0 - x;
  return 4.0 * b / (std::sqrt(w * w + 16.0 * b * b * x) + w);
}

double duan_bound_at(double a, double b, double t, const SqueezeParams& p) {
  require_mode_params(a, b, "duan_bound_at");
  require_ratio(t, "duan_bound_at");
  const double r1 = p.r1();
  const double r2 = p.r2();
  const double g = std::sqrt(r1 * r2);
  // a r + a/r - 1 >= 2a - 1 >= 0.
  const double num = std::sqrt((a * r1 + a / r1 - 1.0) * (b * r2 + b / r2 - 1.0));
  return num / (g + t / g);
}

double duan_bound_extremal(double a, double b, double t, const SqueezeParams& p) {
  require_mode_params(a, b, "duan_bound_extremal");
  require_ratio(t, "duan_bound_extremal");
  const double r1 = p.r1();
  const double r2 = p.r2();
  const double g = std::sqrt(r1 * r2);
  constexpr const char* where = "duan_bound_extremal";
  const double num = std::sqrt(clamp_factor(a * r1 - 0.5, where) *
                               clamp_factor(b * r2 - 0.5, where)) +
                     std::sqrt(clamp_factor(a / r1 - 0.5, where) *
                               clamp_factor(b / r2 - 0.5, where));
  return num / (g + t / g);
}

double identity_55(double a, double b, const SqueezeParams& p) {
  const double r1 = p.r1();
  const double r2 = p.r2();
  return std::sqrt((a * r1 + a / r1 - 1.0) * (b * r2 + b / r2 - 1.0)) -
         std::sqrt((a * r1 - 0.5) * (b * r2 - 0.5)) -
         std::sqrt((a / r1 - 0.5) * (b / r2 - 0.5));
}

AppcResult appc_gap(double n1, double n2, double m1, double m2) {
  for (double v : {n1, n2, m1, m2})
    if (!(v >= 0.5) || !std::isfinite(v))
      throw Error(ErrorCode::OutOfDomain, "appc_gap: arguments must be >= 1/2");
  const double u1 = n1 - 0.5;
  const double u2 = n2 - 0.5;
  const double v1 = m1 - 0.5;
  const double v2 = m2 - 0.5;
  const double gap = std::sqrt((n1 + n2 - 1.0) * (m1 + m2 - 1.0)) - std::sqrt(u1 * v1) -
                     std::sqrt(u2 * v2);
  const double cross = u2 * v1 - v2 * u1;
  const double scale = std::max(1.0, std::abs(u2 * v1) + std::abs(v2 * u1));
  return AppcResult{gap, std::abs(cross) <= 1e-9 * scale};
}

double appc_chord(double n1, double n2, double m1, double m2, double x) {
  return std::sqrt((n1 + x * (n2 - n1) - 0.5) * (m1 + x * (m2 - m1) - 0.5));
}

double appc_chord_curvature(double n1, double n2, double m1, double m2, double x) {
  const double k = (n1 - 0.5) * (m2 - 0.5) - (n2 - 0.5) * (m1 - 0.5);
  const double u = n1 + x * (n2 - n1) - 0.5;
  const double v = m1 + x * (m2 - m1) - 0.5;
  return -0.25 * k * k * std::pow(u, -1.5) * std::pow(v, -1.5);
}

}  // namespace cvsep
