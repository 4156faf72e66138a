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

#ifndef HPSIG_FICTITIOUS_PLAY_HPP_
#define HPSIG_FICTITIOUS_PLAY_HPP_

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "hpsig/equilibrium.hpp"
#include "hpsig/game.hpp"
#include "hpsig/params.hpp"

namespace hpsig {

enum class TieBreak { kUniformRandom, kPreferFirst };

struct FpConfig {
  double p = 0;
  double gamma = 0;
  long long rounds = 100000;
  std::uint64_t seed = 0;
  double init_estimate = 0.5;   // prior value for every empirical estimate
  double pseudo_count = 1.0;    // weight of init_estimate in the running means
  bool randomize_init = false;  // draw initial estimates from the run's RNG
  bool clamp_estimate = true;   // clamp the inferred honeypot rate to [0,1]
  TieBreak tie_break = TieBreak::kUniformRandom;
  long long thinning = 1;       // record every k-th round (first/last always)
};

// One recorded round. Estimates are the post-round values; mu_h/mu_l are the
// posteriors the attacker used this round, consistent with sigma_hat_d_h.
struct FpRecord {
  long long t = 0;
  DefenderType type = DefenderType::kHoneypot;
  Signal signal = Signal::kLow;
  AttackAction action = AttackAction::kNotAttack;
  double sigma_hat_d_h = 0;  // attacker's estimate of P(H | honeypot)
  double sigma_hat_a_h = 0;  // defender's estimate of P(Attack | H)
  double sigma_hat_a_l = 0;  // defender's estimate of P(Attack | L)
  double mu_h = 0;
  double mu_l = 0;
  double defender_payoff = 0;
  double attacker_payoff = 0;
  double running_unet = 0;
};

// Evolving simulation state: counts and the derived estimates.
struct FpState {
  long long t = 0;
  long long high_signals = 0;                 // all rounds
  std::array<long long, 2> signal_rounds{};   // observations per signal [H, L]
  std::array<long long, 2> attack_rounds{};   // attacks per signal [H, L]
  long long theta1_rounds = 0;
  long long theta2_rounds = 0;
  double theta1_payoff_sum = 0;
  double theta2_payoff_sum = 0;
  double sigma_hat_d_h = 0;
  double sigma_hat_a_h = 0;
  double sigma_hat_a_l = 0;
  double mu_h = 0;
  double mu_l = 0;
  double running_unet = 0;
  std::mt19937_64 rng;
};

// Inverts the aggregate H frequency into the honeypot's signal rate:
// (p_h - gamma)/p + gamma, optionally clamped to [0,1].
double EstimateHoneypotSignalRate(double p_h, double p, double gamma, bool clamp);

// Best-response sets under point beliefs/estimates. Order is fixed: signals
// H before L, actions Attack before NotAttack; ties return both.
std::vector<Signal> DefenderBestResponse(const UtilityParams& u,
                                         const AttackerStrategy& estimate);
std::vector<AttackAction> AttackerBestResponse(const UtilityParams& u, double mu,
                                               Signal m);

// Round-based simulator. Each Step draws the type, plays myopic best
// responses against the running estimates, updates counts, estimates,
// posteriors and the running network-average utility.
class FpSimulator {
 public:
  FpSimulator(const UtilityParams& u, const FpConfig& config);

  FpRecord Step();
  const FpState& state() const { return state_; }
  const FpConfig& config() const { return config_; }

 private:
  double DrawUnit();
  template <typename T>
  T PickFromSet(const std::vector<T>& candidates);

  UtilityParams params_;
  FpConfig config_;
  FpState state_;
  // Prior values behind the pseudo-counted means (fixed at construction).
  double init_p_h_ = 0.5;
  double init_a_h_ = 0.5;
  double init_a_l_ = 0.5;
};

struct FpSummary {
  FpConfig config;
  long long rounds = 0;
  long long theta1_rounds = 0;
  long long theta2_rounds = 0;
  double final_sigma_hat_d_h = 0;
  double final_sigma_hat_a_h = 0;
  double final_sigma_hat_a_l = 0;
  double final_mu_h = 0;
  double final_mu_l = 0;
  double final_running_unet = 0;
  // The utility estimate needs both types observed and at least two rounds.
  bool utility_conclusive = false;
};

struct FpRunResult {
  FpConfig config;
  std::vector<FpRecord> records;  // thinned; first and last round kept
  FpSummary summary;
};

FpRunResult RunFictitiousPlay(const UtilityParams& u, const FpConfig& config);

// Runs one simulation per seed (possibly concurrently); results come back in
// seed order and are identical to sequential runs.
std::vector<FpRunResult> RunSeedBatch(const UtilityParams& u,
                                      const FpConfig& base,
                                      const std::vector<std::uint64_t>& seeds,
                                      int max_threads = 0);

// Distance from estimated play (d1, a_h, a_l) to a reference equilibrium in
// strategy space; interval references use the closest point of the segment.
double DistanceToEquilibrium(const UtilityParams& u, double sigma_hat_d_h,
                             double sigma_hat_a_h, double sigma_hat_a_l,
                             const GammaPbne& reference);

struct ConvergenceReport {
  std::vector<double> distances;  // aligned with the recorded rounds
  double final_distance = 0;
  // First recorded round with distance below the threshold; -1 if never.
  long long first_below_010 = -1;
  long long first_below_005 = -1;
  long long first_below_002 = -1;
};

// Throws std::invalid_argument if the reference was solved for a different
// (p, gamma) than the run.
ConvergenceReport ConvergenceMetrics(const UtilityParams& u,
                                     const FpRunResult& run,
                                     const GammaPbne& reference);

}  // namespace hpsig

#endif  // HPSIG_FICTITIOUS_PLAY_HPP_
