// Copyright 2026 the hpsig authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HPSIG_TESTS_TEST_SUPPORT_HPP_
#define HPSIG_TESTS_TEST_SUPPORT_HPP_

#include <cmath>
#include <random>

#include "hpsig/params.hpp"

namespace hpsig_test {

// The worked parameterization used throughout the unit tests. Expected values
// in the assertions were computed by hand from these numbers.
inline hpsig::UtilityParams BaselineParams() {
  hpsig::UtilityParams u;
  u.alpha = 10;
  u.beta = 5;
  u.c_d = 80;
  u.c_a = 10;
  u.f = 10;
  u.g = 2;
  u.h = 2;
  return u;
}

inline bool NearAbs(double a, double b, double tol) {
  return std::fabs(a - b) <= tol;
}

// Random admissible parameter set; every model constraint holds with slack by
// construction.
inline hpsig::UtilityParams SampleValidParams(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  hpsig::UtilityParams u;
  u.alpha = std::uniform_real_distribution<double>(0.5, 20.0)(rng);
  u.beta = u.alpha * unit(rng);
  u.f = std::uniform_real_distribution<double>(1.05, 12.0)(rng);
  u.c_d = (u.f * u.alpha - u.alpha) * unit(rng);
  u.g = std::uniform_real_distribution<double>(0.5, 5.0)(rng);
  u.c_a = u.g * u.alpha * unit(rng);
  u.h = std::uniform_real_distribution<double>(1.05, 5.0)(rng);
  return u;
}

}  // namespace hpsig_test

#endif  // HPSIG_TESTS_TEST_SUPPORT_HPP_
