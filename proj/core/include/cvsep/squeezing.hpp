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

// Local squeezing of a standard-form covariance matrix and the closed-form
// boundary of the P-representation condition: optimal squeezing factors, the
// implied |c1| bound, the Duan-type bound at a given squeezing and the
// concavity inequality that links the two.

#include <utility>

#include "cvsep/covariance.hpp"

namespace cvsep {

/// Local squeezing factors r1, r2 >= 1 (per mode, q scaled by sqrt(r)).
class SqueezeParams {
 public:
  /// Throws OutOfDomain unless both factors are finite and >= 1.
  SqueezeParams(double r1, double r2);

  double r1() const { return r1_; }
  double r2() const { return r2_; }

 private:
  double r1_;
  double r2_;
};

struct SqueezeSolution {
  SqueezeParams params;
  double D;  // the radicand; sqrt(D) enters r1, r2 and the bound
  double c1_bound;
  double c2_bound;  // t * c1_bound
  double t;
};

/// Diagonal entries (a r1, a/r1, b r2, b/r2), correlations c1 sqrt(r1 r2) and
/// c2 / sqrt(r1 r2).
CovMat4 apply_squeeze(const StandardForm& sf, const SqueezeParams& p);

/// The local symplectic pair (diag(sqrt r1, 1/sqrt r1), diag(sqrt r2, 1/sqrt r2))
/// for which apply_symp reproduces apply_squeeze.
std::pair<Symp2, Symp2> squeeze_symplectics(const SqueezeParams& p);

struct PrepConditions {
  bool q_product;  // (a - 1/(2 r1)) (b - 1/(2 r2)) >= c1^2
  bool p_product;  // (a - r1/2) (b - r2/2) >= c2^2
  bool q_trace;    // (a - 1/(2 r1)) + (b - 1/(2 r2)) >= 0
  bool p_trace;    // (a - r1/2) + (b - r2/2) >= 0

  bool all() const { return q_product && p_product && q_trace && p_trace; }
};

/// Conditions under which the squeezed matrix minus I/2 is PSD; each is
/// tested with slack tol * max(1, |rhs|).
PrepConditions prep_conditions(const StandardForm& sf, const SqueezeParams& p,
                               double tol = 1e-12);

/// Optimal squeezing for the P-representation boundary at fixed (a, b) and
/// t = |c2|/|c1|. Throws OutOfDomain for a < 1/2, b < 1/2 or t outside [0, 1].
///
/// r1 = (ab(1-t^2) + sqrt D)/(at + b), r2 = (ab(1-t^2) + sqrt D)/(a + bt),
/// D = a^2 b^2 (1-t^2)^2 + t (a + bt)(at + b).
///
/// The bound is evaluated as 1/2 sqrt((4a^2-1)(4b^2-1) / (X + 2 sqrt D)) with
/// X = 2ab(1+t^2) + t, which equals (1/2t) sqrt(X - 2 sqrt D) for t > 0
/// (since X^2 - 4D = t^2 (4a^2-1)(4b^2-1)) and stays finite at t = 0.
SqueezeSolution optimal_squeeze(double a, double b, double t);

/// The bound in its direct closed form: (1/2t) sqrt(X - 2 sqrt D) for t > 0 and
/// sqrt((a r1 - 1/2)(b r2 - 1/2) / (r1 r2)) at the optimal r for t = 0.
double prep_bound_closed_form(double a, double b, double t);

struct ExtremalityResidual {
  double value;
  bool endpoint;  // denominators vanished; value taken from r2_of_r1
};

/// (a r1 - 1/2)/(a/r1 - 1/2) - (b r2 - 1/2)/(b/r2 - 1/2). When a denominator
/// vanishes (r1 = 2a or r2 = 2b) the residual is r2 - r2_of_r1(a, b, r1); for a
/// or b at 1/2 the constraint is vacuous and the residual is 0.
ExtremalityResidual extremality_residual(double a, double b, const SqueezeParams& p);

/// The extremal r2 as a function of r1 on [1, 2a]; r2(1) = 1, r2(2a) = 2b.
/// Throws OutOfDomain for a <= 1/2, b < 1/2 or r1 outside [1, 2a].
double r2_of_r1(double a, double b, double r1);

/// Largest |c1| (with |c2| = t|c1|) allowed by the Duan-type condition for the
/// standard form squeezed by p:
///   sqrt((a r1 + a/r1 - 1)(b r2 + b/r2 - 1)) / (sqrt(r1 r2) + t / sqrt(r1 r2)).
/// Minimizing over p gives the separability bound, attained at the optimal
/// squeezing. Throws OutOfDomain for a, b < 1/2 or t outside [0, 1].
double duan_bound_at(double a, double b, double t, const SqueezeParams& p);

/// The same bound with the numerator split as
///   sqrt((a r1 - 1/2)(b r2 - 1/2)) + sqrt((a/r1 - 1/2)(b/r2 - 1/2)),
/// which equals duan_bound_at only on the extremal curve. Throws OutOfDomain
/// when a factor is negative beyond rounding.
double duan_bound_extremal(double a, double b, double t, const SqueezeParams& p);

/// sqrt((a r1 + a/r1 - 1)(b r2 + b/r2 - 1)) - sqrt((a r1 - 1/2)(b r2 - 1/2))
///   - sqrt((a/r1 - 1/2)(b/r2 - 1/2)); zero on the extremal curve, positive off it.
double identity_55(double a, double b, const SqueezeParams& p);

struct AppcResult {
  double gap;
  bool equality_condition_met;
};

/// sqrt((n1+n2-1)(m1+m2-1)) - sqrt((n1-1/2)(m1-1/2)) - sqrt((n2-1/2)(m2-1/2)) >= 0,
/// with equality iff (n2-1/2)/(n1-1/2) = (m2-1/2)/(m1-1/2). The ratio condition
/// is checked cross-multiplied within 1e-9. Throws OutOfDomain for any argument
/// below 1/2.
AppcResult appc_gap(double n1, double n2, double m1, double m2);

/// f(x) = sqrt((n1 + x(n2-n1) - 1/2)(m1 + x(m2-m1) - 1/2)); concave on [0, 1].
double appc_chord(double n1, double n2, double m1, double m2, double x);

/// Closed-form f''(x) of appc_chord.
double appc_chord_curvature(double n1, double n2, double m1, double m2, double x);

}  // namespace cvsep
