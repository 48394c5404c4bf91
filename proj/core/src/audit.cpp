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

#include "cvsep/audit.hpp"

#include <random>
#include <sstream>

#include "cvsep/criteria.hpp"
#include "cvsep/statezoo.hpp"

namespace cvsep {
namespace {

constexpr std::size_t kMaxLogged = 8;

}  // namespace

AuditReport run_hierarchy_audit(const AuditOptions& opts) {
  AuditReport rep;
  std::mt19937_64 master(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto implication = [&](bool premise, bool conclusion, std::size_t index, const char* what) {
    ++rep.implications_checked;
    if (premise && !conclusion) {
      ++rep.counterexamples;
      if (rep.counterexample_log.size() < kMaxLogged) {
        std::ostringstream os;
        os << "sample " << index << ": " << what;
        rep.counterexample_log.push_back(os.str());
      }
    }
  };

  for (std::size_t i = 0; i < opts.samples; ++i) {
    const std::uint64_t state_seed = master();
    std::mt19937_64 rng(master());

    CovMat4 v = (i % 2 == 0) ? statezoo::make(statezoo::RandomPhysical{state_seed})
                             : statezoo::make(statezoo::RandomSeparable{state_seed});
    if (i % 4 == 3)
      v = apply_symp(v, statezoo::random_symp2(rng), statezoo::random_symp2(rng));
    ++rep.samples;

    const auto simon = simon_criterion(v, opts.tol);
    const auto duan = duan_criterion(v, opts.tol);
    implication(simon.satisfied, duan.satisfied, i, "Simon holds but Duan fails");
    if (!simon.satisfied) ++rep.entangled;
    if (duan.satisfied && !simon.satisfied) ++rep.simon_strict;

    std::vector<TildeMat> tildes{TildeMat::zero()};
    const SymMat4 gap = prep_gap_matrix(v);
    const auto gap_eig = eig_sym(gap);
    const bool p_rep = is_psd_sym(gap, opts.tol);
    if (p_rep) {
      ++rep.p_representable;
      const TildeMat prep_tilde = tilde_from_prep(v, opts.tol);
      const auto stringent = stringent_criterion(v, prep_tilde, opts.tol);
      implication(true, stringent.satisfied, i,
                  "P-representable but stringent(V, V - I/2) fails");
      tildes.push_back(prep_tilde);

      // s R <= lambda_min(V - I/2) I <= V - I/2 for s lambda_max(R) <= lambda_min.
      const SymMat4 r = statezoo::random_psd(rng, 1.0);
      const double rmax = eig_sym(r).values[3];
      const double lmin = std::max(0.0, gap_eig.values[0]);
      if (rmax > 0.0) tildes.emplace_back((unit(rng) * lmin / rmax) * r);
    }

    // An unconstrained PSD matrix: the implication still has to hold, and it is
    // where the stringent condition can be strictly stronger than Simon's.
    tildes.emplace_back(statezoo::random_psd(rng, 0.5 * unit(rng)));

    for (const TildeMat& t : tildes) {
      const auto stringent = stringent_criterion(v, t, opts.tol);
      implication(stringent.satisfied, simon.satisfied, i, "stringent holds but Simon fails");
      for (int sign : {+1, -1}) {
        const auto weak = weak_gap(v, t, sign, opts.tol);
        implication(stringent.satisfied, weak.satisfied, i,
                    "stringent holds but weak_gap fails");
      }
      if (&t != &tildes.front()) {
        ++rep.stringent_trials;
        if (simon.satisfied && !stringent.satisfied) ++rep.stringent_strict;
      }
    }

    const Verdict verdict = classify(v, opts.tol);
    if (!verdict.simon_agrees) ++rep.bound_disagreements;
  }
  return rep;
}

}  // namespace cvsep
