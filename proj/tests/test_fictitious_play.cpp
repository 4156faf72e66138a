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

#include <cmath>
#include <stdexcept>

#include "hpsig/defense.hpp"
#include "hpsig/equilibrium.hpp"
#include "hpsig/fictitious_play.hpp"
#include "test_support.hpp"

using namespace hpsig;
using hpsig_test::BaselineParams;

namespace {

FpConfig CaseDeterrence() {
  FpConfig c;
  c.p = 0.289;
  c.gamma = 0.5;
  c.rounds = 100000;
  c.seed = 1;
  return c;
}

FpConfig CasePooling() {
  FpConfig c;
  c.p = 0.178;
  c.gamma = 0.85;
  c.rounds = 100000;
  c.seed = 1;
  return c;
}

}  // namespace

TEST_CASE("the aggregate high-signal rate inverts to the honeypot rate") {
  CHECK(EstimateHoneypotSignalRate(0.6445, 0.289, 0.5, true) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(EstimateHoneypotSignalRate(0.3555, 0.289, 0.5, true) ==
        doctest::Approx(0.0));
  CHECK(EstimateHoneypotSignalRate(0.9, 0.289, 0.5, true) ==
        doctest::Approx(1.0));
  CHECK(EstimateHoneypotSignalRate(0.9, 0.289, 0.5, false) ==
        doctest::Approx(0.4 / 0.289 + 0.5).epsilon(1e-12));
}

TEST_CASE("myopic best responses with tie sets") {
  const UtilityParams u = BaselineParams();

  CHECK(DefenderBestResponse(u, AttackerStrategy{0.5, 0.5}) ==
        std::vector<Signal>{Signal::kLow});
  CHECK(DefenderBestResponse(u, AttackerStrategy{0.9, 0.5}) ==
        std::vector<Signal>{Signal::kHigh});
  // 100*a_h - 85 == 10*a_l - 5 at a_h = 0.85, a_l = 0.5.
  CHECK(DefenderBestResponse(u, AttackerStrategy{0.85, 0.5}) ==
        std::vector<Signal>{Signal::kHigh, Signal::kLow});

  CHECK(AttackerBestResponse(u, 0.1, Signal::kHigh) ==
        std::vector<AttackAction>{AttackAction::kAttack});
  CHECK(AttackerBestResponse(u, 0.5, Signal::kHigh) ==
        std::vector<AttackAction>{AttackAction::kNotAttack});
  CHECK(AttackerBestResponse(u, 3.0 / 14.0, Signal::kHigh) ==
        std::vector<AttackAction>{AttackAction::kAttack,
                                  AttackAction::kNotAttack});
  CHECK(AttackerBestResponse(u, 1.0 / 3.0, Signal::kLow) ==
        std::vector<AttackAction>{AttackAction::kAttack,
                                  AttackAction::kNotAttack});
}

TEST_CASE("config validation") {
  const UtilityParams u = BaselineParams();
  FpConfig c = CaseDeterrence();
  c.rounds = 0;
  CHECK_THROWS_AS(FpSimulator(u, c), std::invalid_argument);
  c = CaseDeterrence();
  c.p = 0.0;
  CHECK_THROWS_AS(FpSimulator(u, c), std::domain_error);
  c = CaseDeterrence();
  c.pseudo_count = 0.0;
  CHECK_THROWS_AS(FpSimulator(u, c), std::invalid_argument);
  c = CaseDeterrence();
  c.init_estimate = 1.5;
  CHECK_THROWS_AS(FpSimulator(u, c), std::invalid_argument);
  c = CaseDeterrence();
  c.thinning = 0;
  CHECK_THROWS_AS(FpSimulator(u, c), std::invalid_argument);
}

TEST_CASE("runs are reproducible for a fixed seed") {
  const UtilityParams u = BaselineParams();
  FpConfig c = CaseDeterrence();
  c.rounds = 5000;
  c.seed = 7;
  const FpRunResult a = RunFictitiousPlay(u, c);
  const FpRunResult b = RunFictitiousPlay(u, c);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].t == b.records[i].t);
    CHECK(a.records[i].type == b.records[i].type);
    CHECK(a.records[i].signal == b.records[i].signal);
    CHECK(a.records[i].action == b.records[i].action);
    CHECK(a.records[i].sigma_hat_d_h == b.records[i].sigma_hat_d_h);
    CHECK(a.records[i].running_unet == b.records[i].running_unet);
  }
  CHECK(a.summary.final_running_unet == b.summary.final_running_unet);

  FpConfig other = c;
  other.seed = 8;
  const FpRunResult d = RunFictitiousPlay(u, other);
  CHECK(d.summary.final_sigma_hat_a_h != a.summary.final_sigma_hat_a_h);
}

TEST_CASE("thinning keeps the first and last rounds") {
  const UtilityParams u = BaselineParams();
  FpConfig c = CaseDeterrence();
  c.rounds = 1000;
  c.thinning = 100;
  const FpRunResult run = RunFictitiousPlay(u, c);
  REQUIRE(run.records.size() == 11);
  CHECK(run.records.front().t == 1);
  CHECK(run.records[1].t == 100);
  CHECK(run.records.back().t == 1000);
  CHECK(run.summary.theta1_rounds + run.summary.theta2_rounds == 1000);
}

TEST_CASE("recorded posteriors stay consistent with the recorded estimate") {
  const UtilityParams u = BaselineParams();
  FpConfig c = CaseDeterrence();
  c.rounds = 2000;
  const FpRunResult run = RunFictitiousPlay(u, c);
  for (const FpRecord& rec : run.records) {
    const Belief b = PosteriorBeliefs(c.p, rec.sigma_hat_d_h, c.gamma);
    CHECK(rec.mu_h == doctest::Approx(b.mu_h).epsilon(1e-12));
    CHECK(rec.mu_l == doctest::Approx(b.mu_l).epsilon(1e-12));
    CHECK(rec.sigma_hat_a_h >= 0.0);
    CHECK(rec.sigma_hat_a_h <= 1.0);
    CHECK(rec.sigma_hat_a_l >= 0.0);
    CHECK(rec.sigma_hat_a_l <= 1.0);
  }
}

TEST_CASE("play converges to the deterrence equilibrium") {
  const UtilityParams u = BaselineParams();
  const FpConfig c = CaseDeterrence();
  const GammaPbne ref = SolveMixedPbne(u, c.p, c.gamma);
  REQUIRE(ref.regime == Regime::kIII);
  const FpRunResult run = RunFictitiousPlay(u, c);
  const ConvergenceReport conv = ConvergenceMetrics(u, run, ref);
  CHECK(conv.final_distance < 0.05);
  CHECK(conv.first_below_010 > 0);
  CHECK(conv.first_below_010 <= 100000);
  // The running network-average utility approaches the planner's prediction.
  const double predicted = NetworkAvgUtility(u, c.p, ref.sigma_d, ref.attacker);
  CHECK(std::fabs(run.summary.final_running_unet - predicted) < 0.5);
  CHECK(run.summary.utility_conclusive);
}

TEST_CASE("play converges to the pooling equilibrium") {
  const UtilityParams u = BaselineParams();
  const FpConfig c = CasePooling();
  const GammaPbne ref = SolveMixedPbne(u, c.p, c.gamma);
  REQUIRE(ref.regime == Regime::kI);
  const FpRunResult run = RunFictitiousPlay(u, c);
  const ConvergenceReport conv = ConvergenceMetrics(u, run, ref);
  CHECK(conv.final_distance < 0.05);
  CHECK(run.summary.final_sigma_hat_d_h > 0.9);
  CHECK(run.summary.final_sigma_hat_a_h > 0.9);
  CHECK(run.summary.final_sigma_hat_a_l > 0.9);
  const double predicted = NetworkAvgUtility(u, c.p, ref.sigma_d, ref.attacker);
  CHECK(std::fabs(run.summary.final_running_unet - predicted) < 0.5);
}

TEST_CASE("seed batches reproduce individual runs in order") {
  const UtilityParams u = BaselineParams();
  FpConfig base = CaseDeterrence();
  base.rounds = 3000;
  base.thinning = 50;
  const std::vector<std::uint64_t> seeds{3, 1, 2};
  const auto batch = RunSeedBatch(u, base, seeds, 2);
  REQUIRE(batch.size() == 3);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    FpConfig single = base;
    single.seed = seeds[i];
    const FpRunResult solo = RunFictitiousPlay(u, single);
    CHECK(batch[i].config.seed == seeds[i]);
    CHECK(batch[i].summary.final_sigma_hat_d_h ==
          solo.summary.final_sigma_hat_d_h);
    CHECK(batch[i].summary.final_running_unet ==
          solo.summary.final_running_unet);
  }
}

TEST_CASE("distance projects onto interval references") {
  const UtilityParams u = BaselineParams();
  const GammaPbne at_p2 = SolveMixedPbne(u, 17.0 / 61.0, 0.5);
  REQUIRE(at_p2.attacker_interval.has_value());
  // A point on the equal-payoff segment is at distance zero from it.
  const double d1 = at_p2.sigma_d.d1;
  CHECK(DistanceToEquilibrium(u, d1, 0.82, 0.2, at_p2) ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(DistanceToEquilibrium(u, d1, 0.85, 0.5, at_p2) ==
        doctest::Approx(0.0).epsilon(1e-9));
  // Off the segment the projection beats the midpoint distance.
  const double off = DistanceToEquilibrium(u, d1, 0.82, 0.5, at_p2);
  CHECK(off > 0.0);
  const double dd = 0.0;
  const double mid = std::sqrt(dd + 0.03 * 0.03 + 0.0);
  CHECK(off <= mid + 1e-12);

  const GammaPbne at_p1 = SolveMixedPbne(u, 0.12, 0.5);
  REQUIRE(at_p1.attacker_interval.has_value());
  CHECK(DistanceToEquilibrium(u, 1.0, 0.93, 1.0, at_p1) ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(DistanceToEquilibrium(u, 1.0, 0.85, 1.0, at_p1) ==
        doctest::Approx(0.05).epsilon(1e-9));
}

TEST_CASE("convergence metrics reject a mismatched reference") {
  const UtilityParams u = BaselineParams();
  FpConfig c = CaseDeterrence();
  c.rounds = 100;
  const FpRunResult run = RunFictitiousPlay(u, c);
  const GammaPbne other = SolveMixedPbne(u, 0.2, 0.5);
  CHECK_THROWS_AS(ConvergenceMetrics(u, run, other), std::invalid_argument);
}

TEST_CASE("alternate options run to completion") {
  const UtilityParams u = BaselineParams();
  FpConfig c = CaseDeterrence();
  c.rounds = 2000;
  c.tie_break = TieBreak::kPreferFirst;
  const FpRunResult first = RunFictitiousPlay(u, c);
  CHECK(first.summary.rounds == 2000);

  c = CaseDeterrence();
  c.rounds = 2000;
  c.randomize_init = true;
  c.seed = 3;
  const FpRunResult random_init = RunFictitiousPlay(u, c);
  CHECK(random_init.summary.rounds == 2000);
  CHECK(std::isfinite(random_init.summary.final_running_unet));

  c = CaseDeterrence();
  c.rounds = 2000;
  c.clamp_estimate = false;
  const FpRunResult unclamped = RunFictitiousPlay(u, c);
  CHECK(unclamped.summary.rounds == 2000);
}
