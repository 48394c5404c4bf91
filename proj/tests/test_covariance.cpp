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

#include <doctest.h>

#include <random>
#include <vector>

#include "cvsep/covariance.hpp"
#include "cvsep/error.hpp"
#include "cvsep/statezoo.hpp"
#include "support.hpp"

using namespace cvsep;

namespace {

struct Invariants {
  double det_a, det_b, det_c, det_v;
};

Invariants invariants(const CovMat4& v) {
  return {det2(v.a_block().mat()), det2(v.b_block().mat()), det2(v.c_block()),
          determinant(v.matrix().mat())};
}

}  // namespace

TEST_CASE("blocks and the standard form layout") {
  const CovMat4 v = CovMat4::standard(1.0, 2.0, 0.3, -0.2);
  CHECK(v.a_block().mat() == Mat2::identity());
  CHECK(v.b_block().mat() == Mat2::identity() * 2.0);
  CHECK(v.c_block() == Mat2::diagonal({0.3, -0.2}));
  CHECK(v.matrix()(0, 2) == 0.3);
  CHECK(v.matrix()(1, 3) == -0.2);

  const CovMat4 w = CovMat4::from_blocks(v.a_block(), v.b_block(), v.c_block());
  CHECK(w.matrix() == v.matrix());
}

TEST_CASE("Symp2 validates determinant one") {
  CHECK_NOTHROW(Symp2(Mat2::from_rows({2.0, 1.0, 1.0, 1.0})));
  CHECK_THROWS_AS(Symp2(Mat2::from_rows({2.0, 0.0, 0.0, 1.0})), Error);
  CHECK_THROWS_AS(Symp2::squeeze(0.0), Error);
  const Symp2 s(Mat2::from_rows({2.0, 1.0, 1.0, 1.0}));
  CHECK(test::max_abs_diff((s * s.inverse()).mat(), Mat2::identity()) < 1e-15);
}

TEST_CASE("local symplectics preserve the four determinants") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const CovMat4 v = statezoo::make(statezoo::RandomPhysical{rng()});
    const CovMat4 w = apply_symp(v, statezoo::random_symp2(rng), statezoo::random_symp2(rng));
    const auto a = invariants(v);
    const auto b = invariants(w);
    CHECK(b.det_a == doctest::Approx(a.det_a).epsilon(1e-10));
    CHECK(b.det_b == doctest::Approx(a.det_b).epsilon(1e-10));
    CHECK(std::abs(b.det_c - a.det_c) < 1e-10 * std::max(1.0, std::abs(a.det_c)));
    CHECK(b.det_v == doctest::Approx(a.det_v).epsilon(1e-10));
  }
  CHECK_THROWS_AS(apply_symp(CovMat4::vacuum(), Mat2::identity() * 2.0, Mat2::identity()), Error);
}

TEST_CASE("flip_sign is an involution that negates det C") {
  const CovMat4 v = statezoo::make(statezoo::RandomPhysical{4});
  const CovMat4 f = flip_sign(v);
  CHECK(det2(f.c_block()) == doctest::Approx(-det2(v.c_block())));
  CHECK(det2(f.b_block().mat()) == doctest::Approx(det2(v.b_block().mat())));
  CHECK(flip_sign(f).matrix() == v.matrix());
}

TEST_CASE("standard form of simple states") {
  const auto vac = to_standard_form(CovMat4::vacuum());
  CHECK(vac.a == doctest::Approx(0.5));
  CHECK(vac.b == doctest::Approx(0.5));
  CHECK(vac.c1 == 0.0);
  CHECK(vac.c2 == 0.0);

  const auto th = to_standard_form(CovMat4(SymMat4::diagonal({1.0, 1.0, 2.0, 2.0})));
  CHECK(th.a == doctest::Approx(1.0));
  CHECK(th.b == doctest::Approx(2.0));
  CHECK(th.c1 == 0.0);
  CHECK(th.c2 == 0.0);
}

TEST_CASE("rotated and squeezed standard forms are recovered") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const double a = test::uniform(rng, 0.5, 4.0);
    const double b = test::uniform(rng, 0.5, 4.0);
    const double c1 = test::uniform(rng, 0.0, 1.0);
    const double c2 = test::uniform(rng, -c1, c1);
    const CovMat4 sf = CovMat4::standard(a, b, c1, c2);
    const CovMat4 v = apply_symp(sf, statezoo::random_symp2(rng), statezoo::random_symp2(rng));
    const StandardForm got = to_standard_form(v);
    CHECK(got.a == doctest::Approx(a).epsilon(1e-10));
    CHECK(got.b == doctest::Approx(b).epsilon(1e-10));
    CHECK(std::abs(got.c1 - c1) < 1e-9);
    CHECK(std::abs(got.c2 - c2) < 1e-9);

    // The returned transforms map the input onto the standard form.
    const CovMat4 mapped = apply_symp(v, got.s1, got.s2);
    CHECK(test::max_abs_diff(mapped.matrix().mat(), got.matrix().matrix().mat()) < 1e-9);
  }
}

TEST_CASE("standard form invariants on random physical states") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const CovMat4 v = statezoo::make(statezoo::RandomPhysical{rng()});
    const StandardForm sf = to_standard_form(v);
    CHECK(sf.a * sf.a == doctest::Approx(det2(v.a_block().mat())).epsilon(1e-10));
    CHECK(sf.b * sf.b == doctest::Approx(det2(v.b_block().mat())).epsilon(1e-10));
    CHECK(std::abs(sf.c1 * sf.c2 - det2(v.c_block())) < 1e-9 * std::max(1.0, sf.a * sf.b));
    CHECK(sf.c1 >= 0.0);
    CHECK(std::abs(sf.c2) <= sf.c1 + 1e-12);
  }
}

TEST_CASE("degenerate blocks are rejected") {
  const CovMat4 v(SymMat4::diagonal({1.0, 0.0, 1.0, 1.0}));
  try {
    (void)to_standard_form(v);
    FAIL("expected DegenerateBlock");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateBlock);
  }
}

TEST_CASE("physicality") {
  CHECK(is_physical(CovMat4::vacuum()).physical);
  CHECK(is_physical(CovMat4::vacuum()).min_eigenvalue == doctest::Approx(0.0).epsilon(1e-14));
  const auto bad = is_physical(CovMat4(0.4 * SymMat4::identity()));
  CHECK_FALSE(bad.physical);
  CHECK(bad.min_eigenvalue == doctest::Approx(-0.1));
}

TEST_CASE("ensemble matrices") {
  const std::vector<EnsembleComponent> e{{0.25, {1.0, 0.0, 0.0, 0.0}}, {0.75, {0.0, 2.0, 0.0, 1.0}}};
  const TildeMat t = tilde_from_ensemble(e);
  CHECK(t.matrix()(0, 0) == doctest::Approx(0.25));
  CHECK(t.matrix()(1, 1) == doctest::Approx(3.0));
  CHECK(t.matrix()(1, 3) == doctest::Approx(1.5));

  const std::vector<EnsembleComponent> neg{{-0.5, {1.0, 0.0, 0.0, 0.0}}, {1.5, {0.0, 0.0, 0.0, 0.0}}};
  CHECK_THROWS_AS(tilde_from_ensemble(neg), Error);
  const std::vector<EnsembleComponent> unnormalized{{0.5, {1.0, 0.0, 0.0, 0.0}}};
  CHECK_THROWS_AS(tilde_from_ensemble(unnormalized), Error);

  CHECK_THROWS_AS(TildeMat(SymMat4::diagonal({1.0, -1.0, 0.0, 0.0})), Error);
}

TEST_CASE("P-representation gap matrix") {
  const CovMat4 th(SymMat4::diagonal({1.0, 1.0, 2.0, 2.0}));
  const TildeMat t = tilde_from_prep(th);
  CHECK(t.matrix() == SymMat4::diagonal({0.5, 0.5, 1.5, 1.5}));
  const CovMat4 tmsv = CovMat4::standard(1.0, 1.0, 0.8, -0.8);
  CHECK_THROWS_AS(tilde_from_prep(tmsv), Error);
}

TEST_CASE("determinants preserved over 100 states x 100 transforms") {
  std::mt19937_64 rng(43);
  double worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    const CovMat4 v = statezoo::make(statezoo::RandomPhysical{rng()});
    const auto a = invariants(v);
    for (int k = 0; k < 100; ++k) {
      const auto b = invariants(apply_symp(v, statezoo::random_symp2(rng), statezoo::random_symp2(rng)));
      for (auto [x, y] : {std::pair{a.det_a, b.det_a}, std::pair{a.det_b, b.det_b},
                          std::pair{a.det_c, b.det_c}, std::pair{a.det_v, b.det_v}})
        worst = std::max(worst, std::abs(x - y) / std::max(1.0, std::abs(x)));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("standard form is idempotent and the transforms invert") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const CovMat4 v = statezoo::make(statezoo::RandomPhysical{rng()});
    const StandardForm sf = to_standard_form(v);
    const StandardForm again = to_standard_form(sf.matrix());
    CHECK(std::abs(again.a - sf.a) <= 1e-12 * std::max(1.0, sf.a));
    CHECK(std::abs(again.b - sf.b) <= 1e-12 * std::max(1.0, sf.b));
    CHECK(std::abs(again.c1 - sf.c1) <= 1e-12 * std::max(1.0, sf.c1));
    CHECK(std::abs(again.c2 - sf.c2) <= 1e-12 * std::max(1.0, sf.c1));

    const CovMat4 back = apply_symp(sf.matrix(), sf.s1.inverse(), sf.s2.inverse());
    CHECK(test::max_abs_diff(back.matrix().mat(), v.matrix().mat()) <= 1e-9);
  }
}

TEST_CASE("ensemble matrices are PSD") {
  std::mt19937_64 rng(53);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<double> w(n);
    double total = 0.0;
    for (double& x : w) total += (x = test::uniform(rng, 0.0, 1.0));
    std::vector<EnsembleComponent> e;
    for (int k = 0; k < n; ++k) e.push_back({w[k] / total, {g(rng), g(rng), g(rng), g(rng)}});
    CHECK(is_psd_sym(tilde_from_ensemble(e).matrix()));
  }
}
