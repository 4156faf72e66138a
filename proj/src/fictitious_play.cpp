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

#include "hpsig/fictitious_play.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace hpsig {
namespace {

// Payoff ties below this margin count as indifference. Without it, runs that
// approach a mixed equilibrium would flip deterministically on noise at the
// last digit instead of exposing both best responses.
constexpr double kTieTolerance = 1e-9;

double AttackValue(const UtilityParams& u, double mu, Signal m) {
  return mu * PayoffAttacker(u, DefenderType::kHoneypot, m,
                             AttackAction::kAttack) +
         (1.0 - mu) * PayoffAttacker(u, DefenderType::kNormal, m,
                                     AttackAction::kAttack);
}

double NotAttackValue(const UtilityParams& u, double mu, Signal m) {
  return mu * PayoffAttacker(u, DefenderType::kHoneypot, m,
                             AttackAction::kNotAttack) +
         (1.0 - mu) * PayoffAttacker(u, DefenderType::kNormal, m,
                                     AttackAction::kNotAttack);
}

}  // namespace

double EstimateHoneypotSignalRate(double p_h, double p, double gamma,
                                  bool clamp) {
  const double raw = (p_h - gamma) / p + gamma;
  if (!clamp) {
    return raw;
  }
  return std::clamp(raw, 0.0, 1.0);
}

std::vector<Signal> DefenderBestResponse(const UtilityParams& u,
                                         const AttackerStrategy& estimate) {
  const DefenderStrategy high{1.0, 0.0};
  const DefenderStrategy low{0.0, 0.0};
  const double u_h =
      ExpectedUtilityDefender(u, high, estimate, DefenderType::kHoneypot);
  const double u_l =
      ExpectedUtilityDefender(u, low, estimate, DefenderType::kHoneypot);
  std::vector<Signal> out;
  if (u_h >= u_l - kTieTolerance) {
    out.push_back(Signal::kHigh);
  }
  if (u_l >= u_h - kTieTolerance) {
    out.push_back(Signal::kLow);
  }
  return out;
}

std::vector<AttackAction> AttackerBestResponse(const UtilityParams& u,
                                               double mu, Signal m) {
  const double v_a = AttackValue(u, mu, m);
  const double v_n = NotAttackValue(u, mu, m);
  std::vector<AttackAction> out;
  if (v_a >= v_n - kTieTolerance) {
    out.push_back(AttackAction::kAttack);
  }
  if (v_n >= v_a - kTieTolerance) {
    out.push_back(AttackAction::kNotAttack);
  }
  return out;
}

FpSimulator::FpSimulator(const UtilityParams& u, const FpConfig& config)
    : params_(u), config_(config) {
  RequireValidParams(u);
  if (!(config.p > 0.0 && config.p < 1.0)) {
    throw std::domain_error("fp: p must be in (0,1)");
  }
  if (!(config.gamma > 0.0 && config.gamma < 1.0)) {
    throw std::domain_error("fp: gamma must be in (0,1)");
  }
  if (config.rounds < 1) {
    throw std::invalid_argument("fp: rounds must be at least 1");
  }
  if (!(config.pseudo_count > 0.0)) {
    throw std::invalid_argument("fp: pseudo_count must be positive");
  }
  if (config.thinning < 1) {
    throw std::invalid_argument("fp: thinning must be at least 1");
  }
  if (!(config.init_estimate >= 0.0 && config.init_estimate <= 1.0)) {
    throw std::invalid_argument("fp: init_estimate must be in [0,1]");
  }
  state_.rng.seed(config.seed);
  if (config.randomize_init) {
    init_p_h_ = DrawUnit();
    init_a_h_ = DrawUnit();
    init_a_l_ = DrawUnit();
  } else {
    init_p_h_ = config.init_estimate;
    init_a_h_ = config.init_estimate;
    init_a_l_ = config.init_estimate;
  }
  const double d_play = EstimateHoneypotSignalRate(init_p_h_, config.p,
                                                   config.gamma, true);
  state_.sigma_hat_d_h = config.clamp_estimate
                             ? d_play
                             : EstimateHoneypotSignalRate(
                                   init_p_h_, config.p, config.gamma, false);
  state_.sigma_hat_a_h = init_a_h_;
  state_.sigma_hat_a_l = init_a_l_;
  const Belief b = PosteriorBeliefs(config.p, d_play, config.gamma);
  state_.mu_h = b.mu_h;
  state_.mu_l = b.mu_l;
}

double FpSimulator::DrawUnit() {
  return static_cast<double>(state_.rng() >> 11) * 0x1.0p-53;
}

template <typename T>
T FpSimulator::PickFromSet(const std::vector<T>& candidates) {
  if (candidates.size() == 1 || config_.tie_break == TieBreak::kPreferFirst) {
    return candidates.front();
  }
  auto idx = static_cast<std::size_t>(DrawUnit() *
                                      static_cast<double>(candidates.size()));
  idx = std::min(idx, candidates.size() - 1);
  return candidates[idx];
}

FpRecord FpSimulator::Step() {
  const long long t = state_.t + 1;
  const double w = config_.pseudo_count;

  // The defender responds to the attack-rate estimates from previous rounds.
  const AttackerStrategy prior_estimate{state_.sigma_hat_a_h,
                                        state_.sigma_hat_a_l};

  const DefenderType type = DrawUnit() < config_.p ? DefenderType::kHoneypot
                                                   : DefenderType::kNormal;
  Signal signal;
  if (type == DefenderType::kHoneypot) {
    signal = PickFromSet(DefenderBestResponse(params_, prior_estimate));
  } else {
    signal = DrawUnit() < config_.gamma ? Signal::kHigh : Signal::kLow;
  }

  // The attacker sees the signal before moving, so this round's observation
  // is already part of the frequency it inverts.
  if (signal == Signal::kHigh) {
    ++state_.high_signals;
  }
  const double p_high =
      (w * init_p_h_ + static_cast<double>(state_.high_signals)) /
      (w + static_cast<double>(t));
  const double d_play =
      EstimateHoneypotSignalRate(p_high, config_.p, config_.gamma, true);
  const double d_recorded =
      config_.clamp_estimate
          ? d_play
          : EstimateHoneypotSignalRate(p_high, config_.p, config_.gamma,
                                       false);
  const Belief belief = PosteriorBeliefs(config_.p, d_play, config_.gamma);
  const double mu =
      signal == Signal::kHigh ? belief.mu_h : belief.mu_l;

  const AttackAction action =
      PickFromSet(AttackerBestResponse(params_, mu, signal));

  const std::size_t sig_idx = signal == Signal::kHigh ? 0 : 1;
  ++state_.signal_rounds[sig_idx];
  if (action == AttackAction::kAttack) {
    ++state_.attack_rounds[sig_idx];
  }
  state_.sigma_hat_a_h =
      (w * init_a_h_ + static_cast<double>(state_.attack_rounds[0])) /
      (w + static_cast<double>(state_.signal_rounds[0]));
  state_.sigma_hat_a_l =
      (w * init_a_l_ + static_cast<double>(state_.attack_rounds[1])) /
      (w + static_cast<double>(state_.signal_rounds[1]));

  const double defender_payoff = PayoffDefender(params_, type, signal, action);
  const double attacker_payoff = PayoffAttacker(params_, type, signal, action);

  if (type == DefenderType::kHoneypot) {
    ++state_.theta1_rounds;
    state_.theta1_payoff_sum += defender_payoff;
  } else {
    ++state_.theta2_rounds;
    state_.theta2_payoff_sum += defender_payoff;
  }
  const double avg1 =
      state_.theta1_rounds > 0
          ? state_.theta1_payoff_sum / static_cast<double>(state_.theta1_rounds)
          : 0.0;
  const double avg2 =
      state_.theta2_rounds > 0
          ? state_.theta2_payoff_sum / static_cast<double>(state_.theta2_rounds)
          : 0.0;
  state_.running_unet = config_.p / (1.0 - config_.p) * avg1 + avg2;

  state_.t = t;
  state_.sigma_hat_d_h = d_recorded;
  state_.mu_h = belief.mu_h;
  state_.mu_l = belief.mu_l;

  FpRecord rec;
  rec.t = t;
  rec.type = type;
  rec.signal = signal;
  rec.action = action;
  rec.sigma_hat_d_h = d_recorded;
  rec.sigma_hat_a_h = state_.sigma_hat_a_h;
  rec.sigma_hat_a_l = state_.sigma_hat_a_l;
  rec.mu_h = belief.mu_h;
  rec.mu_l = belief.mu_l;
  rec.defender_payoff = defender_payoff;
  rec.attacker_payoff = attacker_payoff;
  rec.running_unet = state_.running_unet;
  return rec;
}

FpRunResult RunFictitiousPlay(const UtilityParams& u, const FpConfig& config) {
  FpSimulator sim(u, config);
  FpRunResult result;
  result.config = config;
  result.records.reserve(
      static_cast<std::size_t>(config.rounds / config.thinning + 2));
  for (long long t = 1; t <= config.rounds; ++t) {
    FpRecord rec = sim.Step();
    if (t == 1 || t == config.rounds || t % config.thinning == 0) {
      result.records.push_back(rec);
    }
  }
  const FpState& s = sim.state();
  FpSummary& sum = result.summary;
  sum.config = config;
  sum.rounds = s.t;
  sum.theta1_rounds = s.theta1_rounds;
  sum.theta2_rounds = s.theta2_rounds;
  sum.final_sigma_hat_d_h = s.sigma_hat_d_h;
  sum.final_sigma_hat_a_h = s.sigma_hat_a_h;
  sum.final_sigma_hat_a_l = s.sigma_hat_a_l;
  sum.final_mu_h = s.mu_h;
  sum.final_mu_l = s.mu_l;
  sum.final_running_unet = s.running_unet;
  sum.utility_conclusive = s.theta1_rounds > 0 && s.theta2_rounds > 0;
  return result;
}

std::vector<FpRunResult> RunSeedBatch(const UtilityParams& u,
                                      const FpConfig& base,
                                      const std::vector<std::uint64_t>& seeds,
                                      int max_threads) {
  if (max_threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    max_threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  std::vector<FpRunResult> results(seeds.size());
  std::size_t next = 0;
  while (next < seeds.size()) {
    const std::size_t batch =
        std::min(static_cast<std::size_t>(max_threads), seeds.size() - next);
    std::vector<std::future<FpRunResult>> futures;
    futures.reserve(batch);
    for (std::size_t i = 0; i < batch; ++i) {
      FpConfig config = base;
      config.seed = seeds[next + i];
      futures.push_back(std::async(std::launch::async, [&u, config] {
        return RunFictitiousPlay(u, config);
      }));
    }
    for (std::size_t i = 0; i < batch; ++i) {
      results[next + i] = futures[i].get();
    }
    next += batch;
  }
  return results;
}

double DistanceToEquilibrium(const UtilityParams& u, double sigma_hat_d_h,
                             double sigma_hat_a_h, double sigma_hat_a_l,
                             const GammaPbne& reference) {
  const double d_ref = reference.sigma_d.d1;
  double a_h_ref = reference.attacker.a_h;
  double a_l_ref = reference.attacker.a_l;
  if (reference.attacker_interval.has_value()) {
    const AttackerMixInterval& iv = *reference.attacker_interval;
    if (reference.regime == Regime::kBoundaryP2) {
      // The reference is the segment a_l = f a_h - c_d/alpha. Minimizing the
      // squared distance over a_h gives a closed form, then clamp to the
      // admissible interval.
      const double c = u.c_d / u.alpha;
      const double f = u.f;
      double a = (sigma_hat_a_h + f * (sigma_hat_a_l + c)) / (1.0 + f * f);
      a = std::clamp(a, iv.a_h_lo, iv.a_h_hi);
      a_h_ref = a;
      a_l_ref = f * a - c;
    } else {
      a_h_ref = std::clamp(sigma_hat_a_h, iv.a_h_lo, iv.a_h_hi);
    }
  }
  const double dd = sigma_hat_d_h - d_ref;
  const double dh = sigma_hat_a_h - a_h_ref;
  const double dl = sigma_hat_a_l - a_l_ref;
  return std::sqrt(dd * dd + dh * dh + dl * dl);
}

ConvergenceReport ConvergenceMetrics(const UtilityParams& u,
                                     const FpRunResult& run,
                                     const GammaPbne& reference) {
  if (run.config.p != reference.p || run.config.gamma != reference.gamma) {
    throw std::invalid_argument(
        "convergence: reference equilibrium was solved for a different "
        "(p, gamma) than the run");
  }
  ConvergenceReport report;
  report.distances.reserve(run.records.size());
  for (const FpRecord& rec : run.records) {
    const double dist = DistanceToEquilibrium(
        u, rec.sigma_hat_d_h, rec.sigma_hat_a_h, rec.sigma_hat_a_l, reference);
    report.distances.push_back(dist);
    if (report.first_below_010 < 0 && dist < 0.10) {
      report.first_below_010 = rec.t;
    }
    if (report.first_below_005 < 0 && dist < 0.05) {
      report.first_below_005 = rec.t;
    }
    if (report.first_below_002 < 0 && dist < 0.02) {
      report.first_below_002 = rec.t;
    }
  }
  if (!report.distances.empty()) {
    report.final_distance = report.distances.back();
  }
  return report;
}

}  // namespace hpsig
