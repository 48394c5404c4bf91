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

// Separability conditions on two-mode covariance matrices, from the most
// stringent (ensemble-augmented uncertainty relation) down to the Duan-type
// block condition, plus the composite classifier.
//
// Conditions quantified over all real parameters d, f, g, h are decided
// through Hermitian matrix forms: for x = (d, f), y = (g, h) and v = x + iy,
//   v^dagger [W + (i/2) diag(J, sigma J)] v
//     = Q_W(d, f) + Q_W(g, h) - (d^T J g + sigma f^T J h),
// so checking both sigma = +1 and sigma = -1 covers the absolute values.

#include <map>
#include <optional>
#include <string>

#include "cvsep/covariance.hpp"
#include "cvsep/squeezing.hpp"

namespace cvsep {

/// Coefficients of the quadrature combinations X(d, f) and X(g, h).
struct ParamSet {
  Vec2 d{};
  Vec2 f{};
  Vec2 g{};
  Vec2 h{};
};

enum class SignBranch { None, Plus, Minus, Both };

std::string_view to_string(SignBranch b);

struct CriterionReport {
  bool satisfied = true;
  double margin = 0.0;     // min eigenvalue over branches, or min algebraic gap
  double threshold = 0.0;  // satisfied <=> margin >= -threshold
  SignBranch branch = SignBranch::None;
  std::optional<ParamSet> witness;  // matrix-form criteria: present iff violated
};

/// d^T A d + f^T B f + 2 d^T C f, for V or the ensemble matrix.
double quad_form(const SymMat4& m, const Vec2& d, const Vec2& f);

/// Q_{V-T}(d, f) + Q_{V-T}(g, h) - |d^T J g + f^T J h|; negative values
/// violate the uncertainty relation valid for every state.
double gap_general(const CovMat4& v, const TildeMat& t, const ParamSet& p);

/// Q_{V-T}(d, f) + Q_{V-T}(g, h) - |d^T J g| - |f^T J h|; negative values
/// rule out separability.
double gap_separable(const CovMat4& v, const TildeMat& t, const ParamSet& p);

/// (V - T) + (i/2) diag(J, sigma J) >= 0 for sigma = +1 and -1.
CriterionReport stringent_criterion(const CovMat4& v, const TildeMat& t,
                                    double tol = kDefaultTol);

/// V + (i/2) diag(J, sigma J) >= 0 for sigma = +1 (physicality) and
/// sigma = -1 (partial transpose).
CriterionReport simon_criterion(const CovMat4& v, double tol = kDefaultTol);

/// The sigma = +1 branch alone, reported as a criterion.
CriterionReport physicality_criterion(const CovMat4& v, double tol = kDefaultTol);

/// Standard-form algebraic version:
///   4(ab - c1^2)(ab - c2^2) >= a^2 + b^2 + 2|c1 c2| - 1/4,
///   sqrt((2a-1)(2b-1)) >= |c1| + |c2|,  a >= 1/2,  b >= 1/2.
/// The margin is the smallest of the four gaps; no witness is produced.
CriterionReport simon_algebraic(const StandardForm& sf, double tol = kDefaultTol);

/// [[A + J A J^T, C + s J C J^T], [., B + J B J^T]] - (same for T) - I >= 0
/// for one sign s = +1 or -1 (InvalidInput otherwise); the witness obeys
/// g = J^T d, h = s J^T f.
CriterionReport weak_gap(const CovMat4& v, const TildeMat& t, int sign,
                         double tol = kDefaultTol);

/// weak_gap with T = 0 over both signs.
CriterionReport duan_criterion(const CovMat4& v, double tol = kDefaultTol);

/// Largest |c1| (with |c2| = t|c1|) satisfying simon_algebraic exactly, found
/// by bisection on the algebraic predicate. Throws OutOfDomain for a, b < 1/2
/// or t outside [0, 1].
double simon_c1_bound(double a, double b, double t);

enum class Classification { Nonphysical, Entangled, Separable };

std::string_view to_string(Classification c);

struct Verdict {
  Classification kind = Classification::Nonphysical;
  std::map<std::string, CriterionReport> reports;
  std::optional<StandardForm> standard_form;
  std::optional<SqueezeSolution> squeeze;
  /// The P-representation bound and Simon's condition give the same answer.
  bool simon_agrees = true;
};

/// Nonphysical if the uncertainty relation fails; otherwise Separable iff
/// |c1| of the standard form lies within the P-representation bound at the
/// optimal squeezing. Reports: physicality, simon, simon_algebraic, duan,
/// prep_bound. Throws DegenerateBlock from the reduction.
Verdict classify(const CovMat4& v, double tol = kDefaultTol);

}  // namespace cvsep
