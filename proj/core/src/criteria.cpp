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

#include "cvsep/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "cvsep/error.hpp"

namespace cvsep {
namespace {

double jform(const Vec2& x, const Vec2& y) { return x[0] * y[1] - x[1] * y[0]; }

Vec2 jt_apply(const Vec2& x) { return {-x[1], x[0]}; }

Mat4 omega(int sigma) {
  Mat4 im;
  im(0, 1) = 0.5;
  im(1, 0) = -0.5;
  im(2, 3) = 0.5 * sigma;
  im(3, 2) = -0.5 * sigma;
  return im;
}

ParamSet witness_from(const CVec4& v) {
  return ParamSet{{v[0].real(), v[1].real()},
                  {v[2].real(), v[3].real()},
                  {v[0].imag(), v[1].imag()},
                  {v[2].imag(), v[3].imag()}};
}

CriterionReport single_branch(const SymMat4& w, int sigma, double tol) {
  const auto r = is_psd_herm(HermMat4(w, omega(sigma)), tol);
  CriterionReport rep;
  rep.margin = r.min_eigenvalue;
  rep.threshold = tol * std::max(1.0, w.mat().norm_inf() + 0.5);
  rep.satisfied = rep.margin >= -rep.threshold;
  rep.branch = sigma > 0 ? SignBranch::Plus : SignBranch::Minus;
  if (!rep.satisfied) rep.witness = witness_from(r.witness);
  return rep;
}

CriterionReport merge_branches(const CriterionReport& plus, const CriterionReport& minus) {
  const CriterionReport& worst = plus.margin <= minus.margin ? plus : minus;
  CriterionReport rep = worst;
  rep.threshold = std::max(plus.threshold, minus.threshold);
  rep.satisfied = plus.satisfied && minus.satisfied;
  if (std::abs(plus.margin - minus.margin) <= rep.threshold) rep.branch = SignBranch::Both;
  if (rep.satisfied) rep.witness.reset();
  return rep;
}

CriterionReport hermitian_pair(const SymMat4& w, double tol) {
  return merge_branches(single_branch(w, +1, tol), single_branch(w, -1, tol));
}

// J M J^T. For symmetric M, M + J M J^T = tr(M) I.
Mat2 j_sandwich(const Mat2& m) { return kJ * m * kJ.transpose(); }

}  // namespace

std::string_view to_string(SignBranch b) {
  switch (b) {
    case SignBranch::None: return "none";
    case SignBranch::Plus: return "plus";
    case SignBranch::Minus: return "minus";
    case SignBranch::Both: return "both";
  }
  return "none";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Nonphysical: return "Nonphysical";
    case Classification::Entangled: return "Entangled";
    case Classification::Separable: return "Separable";
  }
  return "Nonphysical";
}

double quad_form(const SymMat4& m, const Vec2& d, const Vec2& f) {
  return m.quad({d[0], d[1], f[0], f[1]});
}

double gap_general(const CovMat4& v, const TildeMat& t, const ParamSet& p) {
  const SymMat4 w = v.matrix() - t.matrix();
  return quad_form(w, p.d, p.f) + quad_form(w, p.g, p.h) -
         std::abs(jform(p.d, p.g) + jform(p.f, p.h));
}

double gap_separable(const CovMat4& v, const TildeMat& t, const ParamSet& p) {
  const SymMat4 w = v.matrix() - t.matrix();
  return quad_form(w, p.d, p.f) + quad_form(w, p.g, p.h) - std::abs(jform(p.d, p.g)) -
         std::abs(jform(p.f, p.h));
}

CriterionReport stringent_criterion(const CovMat4& v, const TildeMat& t, double tol) {
  return hermitian_pair(v.matrix() - t.matrix(), tol);
}

CriterionReport simon_criterion(const CovMat4& v, double tol) {
  return hermitian_pair(v.matrix(), tol);
}

CriterionReport physicality_criterion(const CovMat4& v, double tol) {
  return single_branch(v.matrix(), +1, tol);
}

CriterionReport simon_algebraic(const StandardForm& sf, double tol) {
  const double a = sf.a;
  const double b = sf.b;
  const double c1 = std::abs(sf.c1);
  const double c2 = std::abs(sf.c2);
  const double g1 =
      4.0 * (a * b - c1 * c1) * (a * b - c2 * c2) - (a * a + b * b) - 2.0 * c1 * c2 + 0.25;
  const double g2 = std::sqrt(std::max(0.0, (2.0 * a - 1.0) * (2.0 * b - 1.0))) - c1 - c2;

  CriterionReport rep;
  rep.margin = std::min({g1, g2, a - 0.5, b - 0.5});
  rep.threshold = tol * std::max(1.0, a * a + b * b);
  rep.satisfied = rep.margin >= -rep.threshold;
  return rep;
}

CriterionReport weak_gap(const CovMat4& v, const TildeMat& t, int sign, double tol) {
  if (sign != 1 && sign != -1)
    throw Error(ErrorCode::InvalidInput, "weak_gap: sign must be +1 or -1");
  const double s = sign;
  const CovMat4 w(v.matrix() - t.matrix());
  const Mat2 a = w.a_block().mat();
  const Mat2 b = w.b_block().mat();
  const Mat2 c = w.c_block();
  const Mat2 aa = a + j_sandwich(a) - Mat2::identity();
  const Mat2 bb = b + j_sandwich(b) - Mat2::identity();
  const Mat2 cc = c + s * j_sandwich(c);

  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = aa(i, j);
      m(i + 2, j + 2) = bb(i, j);
      m(i, j + 2) = cc(i, j);
      m(j + 2, i) = cc(i, j);
    }
  const SymMat4 sm = SymMat4::symmetrized(m);
  const auto eig = eig_sym(sm);

  CriterionReport rep;
  rep.margin = eig.values[0];
  rep.threshold = tol * psd_scale(sm.mat());
  rep.satisfied = rep.margin >= -rep.threshold;
  rep.branch = s > 0 ? SignBranch::Plus : SignBranch::Minus;
  if (!rep.satisfied) {
    ParamSet p;
    p.d = {eig.vectors(0, 0), eig.vectors(1, 0)};
    p.f = {eig.vectors(2, 0), eig.vectors(3, 0)};
    p.g = jt_apply(p.d);
    const Vec2 jf = jt_apply(p.f);
    p.h = {s * jf[0], s * jf[1]};
    rep.witness = p;
  }
  return rep;
}

CriterionReport duan_criterion(const CovMat4& v, double tol) {
  const TildeMat zero = TildeMat::zero();
  return merge_branches(weak_gap(v, zero, +1, tol), weak_gap(v, zero, -1, tol));
}

double simon_c1_bound(double a, double b, double t) {
  if (!(a >= 0.5) || !(b >= 0.5))
    throw Error(ErrorCode::OutOfDomain, "simon_c1_bound: requires a, b >= 1/2");
  if (!(t >= 0.0 && t <= 1.0))
    throw Error(ErrorCode::OutOfDomain, "simon_c1_bound: requires 0 <= t <= 1");

  // Both algebraic conditions decrease in c on [0, c_max], where c_max is the
  // root of the second one, so the feasible set is an interval [0, bound].
  auto feasible = [a, b, t](double c) {
    StandardForm sf{a, b, c, t * c};
    const auto rep = simon_algebraic(sf, 0.0);
    return rep.satisfied;
  };
  const double c_max = std::sqrt((2.0 * a - 1.0) * (2.0 * b - 1.0)) / (1.0 + t);
  if (feasible(c_max)) return c_max;
  double lo = 0.0;
  double hi = c_max;
  for (int it = 0; it < 200 && lo < hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

Verdict classify(const CovMat4& v, double tol) {
  Verdict out;
  const CriterionReport phys = physicality_criterion(v, tol);
  out.reports["physicality"] = phys;
  out.reports["simon"] = simon_criterion(v, tol);
  out.reports["duan"] = duan_criterion(v, tol);
  if (!phys.satisfied) {
    out.kind = Classification::Nonphysical;
    return out;
  }

  StandardForm sf = to_standard_form(v);
  out.reports["simon_algebraic"] = simon_algebraic(sf, tol);

  // Physical states have a, b >= 1/2; absorb rounding below that edge.
  const double a = std::max(sf.a, 0.5);
  const double b = std::max(sf.b, 0.5);
  const double c1 = std::abs(sf.c1);
  const double t = c1 > 0.0 ? std::min(1.0, std::abs(sf.c2) / c1) : 0.0;
  const SqueezeSolution sol = optimal_squeeze(a, b, t);

  CriterionReport prep;
  prep.margin = sol.c1_bound - c1;
  prep.threshold = tol * std::max(1.0, sol.c1_bound);
  prep.satisfied = prep.margin >= -prep.threshold;
  out.reports["prep_bound"] = prep;

  out.kind = prep.satisfied ? Classification::Separable : Classification::Entangled;
  out.simon_agrees = prep.satisfied == out.reports["simon"].satisfied;
  out.standard_form = sf;
  out.squeeze = sol;
  return out;
}

}  // namespace cvsep
