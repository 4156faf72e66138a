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

#ifndef HPSIG_GAME_HPP_
#define HPSIG_GAME_HPP_

#include <string_view>

#include "hpsig/params.hpp"

namespace hpsig {

enum class DefenderType { kHoneypot, kNormal };
enum class Signal { kHigh, kLow };
enum class AttackAction { kAttack, kNotAttack };

std::string_view ToString(DefenderType t);  // "theta1" / "theta2"
std::string_view ToString(Signal m);        // "H" / "L"
std::string_view ToString(AttackAction a);  // "A" / "N"

// Behavior strategy of the defender: d1 = P(H | honeypot). The normal-node
// signal rate gamma is fixed by policy, not chosen in equilibrium.
struct DefenderStrategy {
  double d1 = 0;
  double gamma = 0;
};

// Behavior strategy of the attacker: attack probability per observed signal.
struct AttackerStrategy {
  double a_h = 0;  // P(Attack | H)
  double a_l = 0;  // P(Attack | L)
};

// Posterior over the sender type after each signal. off_path_* marks signals
// with zero probability under the strategy profile; their posterior is set to
// the caller's off-path value instead of a Bayes quotient.
struct Belief {
  double mu_h = 0;  // P(honeypot | H)
  double mu_l = 0;  // P(honeypot | L)
  bool off_path_h = false;
  bool off_path_l = false;
};

// Terminal payoffs for the eight (type, signal, action) leaves.
double PayoffDefender(const UtilityParams& u, DefenderType t, Signal m,
                      AttackAction a);
double PayoffAttacker(const UtilityParams& u, DefenderType t, Signal m,
                      AttackAction a);

// Expected defender payoff for one node of the given type under behavior
// strategies (linear interpolation over the terminal payoffs).
double ExpectedUtilityDefender(const UtilityParams& u, const DefenderStrategy& sd,
                               const AttackerStrategy& sa, DefenderType t);

// Expected attacker payoff after observing m against a sender of known type.
double ExpectedUtilityAttacker(const UtilityParams& u, const AttackerStrategy& sa,
                               DefenderType t, Signal m);

// Bayes posterior under prior p = P(honeypot) and signal rates (d1, gamma).
// Throws std::domain_error if p is outside (0,1) and std::invalid_argument if
// d1 or gamma is outside [0,1].
Belief PosteriorBeliefs(double p, double d1, double gamma,
                        double off_path_value = 0.0);

}  // namespace hpsig

#endif  // HPSIG_GAME_HPP_
