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

#ifndef HPSIG_EQUILIBRIUM_HPP_
#define HPSIG_EQUILIBRIUM_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hpsig/game.hpp"
#include "hpsig/params.hpp"

namespace hpsig {

// Prior regimes of the fixed-gamma equilibrium, split by the thresholds p1 and
// p2. In regime I the attacker attacks after both signals; in regime II the
// honeypot mixes and the attacker still attacks after L; in regime III low
// signals are left alone. Exact threshold hits give equilibrium intervals.
enum class Regime { kI, kII, kIII, kBoundaryP1, kBoundaryP2 };

std::string_view RegimeName(Regime r);  // "I", "II", "III", "boundary-p1", "boundary-p2"
int RegimeIndex(Regime r);              // 1, 2, 3 (boundaries map to 1 and 2)

// Aggregate constants of the attack/deterrence tradeoff:
//   A = (h*g*alpha - c_a) / (f*alpha + c_a),  B = (g*alpha - c_a) / (alpha + c_a),
//   p1 = A*gamma / (1 + A*gamma),
//   p2 = (A*gamma + B*(1-gamma)) / (1 + A*gamma + B*(1-gamma)),
//   p3 = (1-gamma)*b1 / ((1-gamma)*b1 + b2)   with b1 = g*alpha - c_a, b2 = alpha + c_a.
struct RegimeConstants {
  double A = 0;
  double B = 0;
  double p1 = 0;
  double p2 = 0;
  double p3 = 0;
};

RegimeConstants ComputeRegimeConstants(const UtilityParams& u, double gamma);

// Honeypot mixing weight F1 that pins the posterior after H to the attacker's
// indifference belief, and the weight F2 that does the same after L:
//   F1 = A * ((1-p)/p) * gamma,   F2 = 1 - B * ((1-p)/p) * (1-gamma).
struct MixingBounds {
  double f1 = 0;
  double f2 = 0;
};

MixingBounds ComputeMixingBounds(const UtilityParams& u, double p, double gamma);

// Posterior on the honeypot type at which the attacker is indifferent after
// signal m: a1/(a1+a2) for H, b1/(b1+b2) for L.
double AttackIndifferenceBelief(const UtilityParams& u, Signal m);

// Along the p2 boundary the attacker's equal-payoff set is a segment where
// the attack rate after L moves with the rate after H: a_l = f*a_h - c_d/alpha.
double BoundaryP2InducedAttackAfterLow(const UtilityParams& u, double a_h);

// Closed interval of attacker H-attack rates supported at a boundary prior.
struct AttackerMixInterval {
  double a_h_lo = 0;
  double a_h_hi = 0;
};

// One equilibrium of the game at fixed (p, gamma). At interior priors the
// profile is unique; at p1/p2 the attacker side is an interval and `attacker`
// holds its midpoint.
struct GammaPbne {
  double p = 0;
  double gamma = 0;
  Regime regime = Regime::kI;
  DefenderStrategy sigma_d;
  AttackerStrategy attacker;
  std::optional<AttackerMixInterval> attacker_interval;
  Belief belief;
};

inline constexpr double kDefaultBoundaryTol = 1e-9;

// Pure-strategy equilibrium: exists iff p <= p1 (the all-attack profile with
// d1 = 1). `profile` is empty above p1 and `reason` says why.
struct PurePbneResult {
  std::optional<GammaPbne> profile;
  std::string reason;
};

PurePbneResult SolvePurePbne(const UtilityParams& u, double p, double gamma);

// Full equilibrium for any interior prior. |p - p_i| <= boundary_tol selects
// the boundary branch. Throws std::domain_error for p outside (0,1),
// std::invalid_argument for gamma outside (0,1).
GammaPbne SolveMixedPbne(const UtilityParams& u, double p, double gamma,
                         double boundary_tol = kDefaultBoundaryTol);

// Brute-force certificate for a claimed equilibrium: grid search over honeypot
// signal rates and attacker responses, plus a Bayes-consistency check of the
// stored beliefs. All gains are "best found minus achieved".
struct DeviationReport {
  double tol = 0;
  double defender_gain = 0;
  double attacker_gain = 0;
  double posterior_error = 0;
  std::vector<std::string> findings;  // populated for components above tol

  double MaxGain() const;
  bool Ok() const;            // against the report's own tol
  bool Ok(double tol) const;  // gains and posterior error all within tol
};

DeviationReport VerifyEquilibrium(const UtilityParams& u, double p, double gamma,
                                  const GammaPbne& eq, double tol = 1e-6,
                                  double grid_step = 1e-3);

}  // namespace hpsig

#endif  // HPSIG_EQUILIBRIUM_HPP_
