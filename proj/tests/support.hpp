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

#include <cmath>
#include <random>

#include "cvsep/matkit.hpp"

namespace cvsep::test {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

template <std::size_t N>
Sym<N> random_sym(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g;
  Mat<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = scale * g(rng);
  return Sym<N>::symmetrized(m);
}

template <std::size_t N>
double max_abs_diff(const Mat<N>& x, const Mat<N>& y) {
  return (x - y).norm_inf();
}

}  // namespace cvsep::test
