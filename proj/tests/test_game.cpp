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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hpsig/game.hpp"
#include "hpsig/params.hpp"
#include "test_support.hpp"

using namespace hpsig;
using hpsig_test::BaselineParams;
using hpsig_test::SampleValidParams;

namespace {

bool HasViolation(const ParamReport& report, const std::string& name) {
  for (const ConstraintViolation& v : report.violations) {
    if (v.name == name) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("baseline parameters satisfy every constraint") {
  CHECK(ValidateParams(BaselineParams()).ok());
  CHECK_NOTHROW(RequireValidParams(BaselineParams()));
}

TEST_CASE("each admissibility constraint is reported by name") {
  UtilityParams u = BaselineParams();
  u.f = 0.9;
  CHECK(HasViolation(ValidateParams(u), "f>1"));

  u = BaselineParams();
  u.c_d = 95;  // capture margin f*alpha - alpha = 90
  CHECK(HasViolation(ValidateParams(u), "f*alpha-alpha-c_d>0"));

  u = BaselineParams();
  u.c_a = 25;  // attack margin g*alpha = 20
  CHECK(HasViolation(ValidateParams(u), "g*alpha-c_a>0"));

  u = BaselineParams();
  u.h = 1.0;
  CHECK(HasViolation(ValidateParams(u), "h>1"));

  u = BaselineParams();
  u.beta = 12;
  CHECK(HasViolation(ValidateParams(u), "-beta+alpha>0"));

  u = BaselineParams();
  u.alpha = -1;
  CHECK_FALSE(ValidateParams(u).ok());

  u = BaselineParams();
  u.g = std::nan("");
  CHECK(HasViolation(ValidateParams(u), "g finite"));

  u = BaselineParams();
  u.c_d = 95;
  CHECK_THROWS_AS(RequireValidParams(u), ValidationError);
}

TEST_CASE("terminal payoffs at the baseline parameters") {
  const UtilityParams u = BaselineParams();
  const auto th1 = DefenderType::kHoneypot;
  const auto th2 = DefenderType::kNormal;
  const auto A = AttackAction::kAttack;
  const auto N = AttackAction::kNotAttack;

  CHECK(PayoffDefender(u, th1, Signal::kHigh, A) == doctest::Approx(15));
  CHECK(PayoffDefender(u, th1, Signal::kHigh, N) == doctest::Approx(-85));
  CHECK(PayoffDefender(u, th1, Signal::kLow, A) == doctest::Approx(5));
  CHECK(PayoffDefender(u, th1, Signal::kLow, N) == doctest::Approx(-5));
  CHECK(PayoffDefender(u, th2, Signal::kHigh, A) == doctest::Approx(-40));
  CHECK(PayoffDefender(u, th2, Signal::kLow, A) == doctest::Approx(-20));
  CHECK(PayoffDefender(u, th2, Signal::kHigh, N) == doctest::Approx(0));
  CHECK(PayoffDefender(u, th2, Signal::kLow, N) == doctest::Approx(0));

  CHECK(PayoffAttacker(u, th1, Signal::kHigh, A) == doctest::Approx(-110));
  CHECK(PayoffAttacker(u, th1, Signal::kLow, A) == doctest::Approx(-20));
  CHECK(PayoffAttacker(u, th2, Signal::kHigh, A) == doctest::Approx(30));
  CHECK(PayoffAttacker(u, th2, Signal::kLow, A) == doctest::Approx(10));
  CHECK(PayoffAttacker(u, th1, Signal::kHigh, N) == doctest::Approx(0));
  CHECK(PayoffAttacker(u, th2, Signal::kLow, N) == doctest::Approx(0));
}

TEST_CASE("expected utilities interpolate the terminal payoffs") {
  const UtilityParams u = BaselineParams();
  const DefenderStrategy sd{0.3, 0.5};
  const AttackerStrategy sa{0.6, 0.2};

  // Honeypot: 0.3*(0.6*15 + 0.4*(-85)) + 0.7*(0.2*5 + 0.8*(-5)).
  CHECK(ExpectedUtilityDefender(u, sd, sa, DefenderType::kHoneypot) ==
        doctest::Approx(-9.6));
  // Normal node: 0.5*(0.6*(-40)) + 0.5*(0.2*(-20)).
  CHECK(ExpectedUtilityDefender(u, sd, sa, DefenderType::kNormal) ==
        doctest::Approx(-14.0));

  CHECK(ExpectedUtilityAttacker(u, sa, DefenderType::kHoneypot, Signal::kHigh) ==
        doctest::Approx(0.6 * -110));
  CHECK(ExpectedUtilityAttacker(u, sa, DefenderType::kNormal, Signal::kLow) ==
        doctest::Approx(0.2 * 10));

  CHECK_THROWS_AS(
      ExpectedUtilityDefender(u, DefenderStrategy{1.2, 0.5}, sa,
                              DefenderType::kHoneypot),
      std::invalid_argument);
  CHECK_THROWS_AS(
      ExpectedUtilityDefender(u, sd, AttackerStrategy{0.5, -0.1},
                              DefenderType::kHoneypot),
      std::invalid_argument);
}

TEST_CASE("posterior beliefs follow Bayes under interior rates") {
  const Belief pooled = PosteriorBeliefs(0.289, 1.0, 0.5);
  CHECK(pooled.mu_h == doctest::Approx(0.289 / 0.6445).epsilon(1e-12));
  CHECK(pooled.mu_l == doctest::Approx(0.0));
  CHECK_FALSE(pooled.off_path_h);
  CHECK_FALSE(pooled.off_path_l);

  // At d1 = A*((1-p)/p)*gamma the posterior after H sits exactly at the
  // attacker's indifference level a1/(a1+a2) = 3/14.
  const double d1 = (3.0 / 11.0) * (0.711 / 0.289) * 0.5;
  const Belief mixed = PosteriorBeliefs(0.289, d1, 0.5);
  CHECK(mixed.mu_h == doctest::Approx(3.0 / 14.0).epsilon(1e-12));
  CHECK(mixed.mu_l > 1.0 / 3.0);
}

TEST_CASE("signals with zero probability are marked off-path") {
  const Belief b = PosteriorBeliefs(0.3, 1.0, 1.0, 0.7);
  CHECK_FALSE(b.off_path_h);
  CHECK(b.off_path_l);
  CHECK(b.mu_l == doctest::Approx(0.7));

  const Belief c = PosteriorBeliefs(0.3, 0.0, 0.0, 0.25);
  CHECK(c.off_path_h);
  CHECK(c.mu_h == doctest::Approx(0.25));
  CHECK(c.mu_l == doctest::Approx(0.3));
}

TEST_CASE("posterior argument validation") {
  CHECK_THROWS_AS(PosteriorBeliefs(0.0, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(PosteriorBeliefs(1.0, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(PosteriorBeliefs(0.5, -0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(PosteriorBeliefs(0.5, 0.5, 1.1), std::invalid_argument);
}

TEST_CASE("posteriors average back to the prior across signals") {
  std::mt19937_64 rng(20260824);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double p = 0.02 + 0.96 * unit(rng);
    const double d1 = unit(rng);
    const double gamma = 0.02 + 0.96 * unit(rng);
    const Belief b = PosteriorBeliefs(p, d1, gamma);
    const double ph = p * d1 + (1 - p) * gamma;
    const double reconstructed = b.mu_h * ph + b.mu_l * (1 - ph);
    CHECK(reconstructed == doctest::Approx(p).epsilon(1e-9));
  }
}

TEST_CASE("sampled parameter sets keep the payoff ordering of the model") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const UtilityParams u = SampleValidParams(rng);
    REQUIRE(ValidateParams(u).ok());
    // Capturing an attacker on a high-interaction honeypot beats quiet
    // operation; attacking a honeypot always loses money.
    CHECK(PayoffDefender(u, DefenderType::kHoneypot, Signal::kHigh,
                         AttackAction::kAttack) >
          PayoffDefender(u, DefenderType::kHoneypot, Signal::kHigh,
                         AttackAction::kNotAttack));
    CHECK(PayoffAttacker(u, DefenderType::kHoneypot, Signal::kHigh,
                         AttackAction::kAttack) < 0);
    CHECK(PayoffAttacker(u, DefenderType::kNormal, Signal::kHigh,
                         AttackAction::kAttack) >
          PayoffAttacker(u, DefenderType::kNormal, Signal::kLow,
                         AttackAction::kAttack));
  }
}
