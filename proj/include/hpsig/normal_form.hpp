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

#ifndef HPSIG_NORMAL_FORM_HPP_
#define HPSIG_NORMAL_FORM_HPP_

#include <array>
#include <string_view>
#include <vector>

#include "hpsig/params.hpp"

namespace hpsig {

// Attacker signal-contingent pure strategies, first letter = response to H,
// second = response to L (A = attack, N = leave alone).
enum class AttackerPure { kAA = 0, kAN = 1, kNA = 2, kNN = 3 };

inline constexpr std::array<AttackerPure, 4> kAttackerPures = {
    AttackerPure::kAA, AttackerPure::kAN, AttackerPure::kNA, AttackerPure::kNN};

std::string_view ToString(AttackerPure s);

// The reduced two-player game: defender columns are the honeypot's pure
// signals (0 = H, 1 = L), attacker rows the four signal-contingent strategies.
// The normal node's gamma mixing and the type prior are folded into payoffs.
struct NormalFormGame {
  double p = 0;
  double gamma = 0;
  std::array<std::array<double, 2>, 4> defender{};  // [row][col]
  std::array<std::array<double, 2>, 4> attacker{};
};

NormalFormGame InduceNormalForm(const UtilityParams& u, double p, double gamma);

// Stakes of attacking per (type, signal): a1/a2 on H, b1/b2 on L, where the
// a/b pairs are the normal-node gain and honeypot loss of the attacker.
struct LineConstants {
  double a1 = 0;  // h*g*alpha - c_a
  double a2 = 0;  // f*alpha + c_a
  double b1 = 0;  // g*alpha - c_a
  double b2 = 0;  // alpha + c_a
};

LineConstants ComputeLineConstants(const UtilityParams& u);

// gamma at which the AN and NA payoff lines can coincide: b1/(a1+b1).
double CriticalGamma(const UtilityParams& u);

// Attacker payoff in p for a fixed honeypot signal rate d1, one affine line
// per pure strategy (the NN line is identically zero).
struct PayoffLine {
  AttackerPure label = AttackerPure::kNN;
  double slope = 0;
  double intercept = 0;

  double At(double p) const { return slope * p + intercept; }
};

std::array<PayoffLine, 4> AttackerLines(const UtilityParams& u, double gamma,
                                        double d1);

// Degeneracy screen for a candidate prior: collects every pairwise
// intersection of the four payoff lines at the deployable honeypot rates
// d1 in {0, 1, F1(p2)} and checks the prior keeps `margin` distance from all
// of them. Also flags the critical gamma where AN/NA can coincide.
struct DegeneracyReport {
  bool gamma_degenerate = false;
  double critical_gamma = 0;
  std::vector<double> p_intersections;  // sorted, deduplicated, interior
  double nearest_distance = 0;
  bool p_safe = false;
};

DegeneracyReport CheckDegeneracy(const UtilityParams& u, double gamma, double p,
                                 double margin);

// Moves a boundary prior into the interior of the target regime (1..3):
// subtracts delta for regimes 1 and 2, adds it for regime 3. Throws
// std::domain_error if the result leaves (0,1).
double PerturbedRatio(const UtilityParams& u, double gamma, double p_star,
                      double delta, int target_regime);

// A mixed equilibrium of the reduced game. `component` marks profiles that
// sit inside a continuum (degenerate game); such profiles are representatives,
// not isolated points.
struct NfEquilibrium {
  std::array<double, 2> defender_mix{};  // over columns (H, L)
  std::array<double, 4> attacker_mix{};  // over rows (AA, AN, NA, NN)
  double defender_value = 0;
  double attacker_value = 0;
  bool component = false;

  double D1() const { return defender_mix[0]; }
  double AttackAfterHigh() const { return attacker_mix[0] + attacker_mix[1]; }
  double AttackAfterLow() const { return attacker_mix[0] + attacker_mix[2]; }
};

// Support enumeration over all 2 x 4 supports. Regular equilibria have
// attacker support of at most two rows; larger best-response ties are
// reported via the component flag.
std::vector<NfEquilibrium> EnumerateEquilibria(const NormalFormGame& g,
                                               double tol = 1e-9);

}  // namespace hpsig

#endif  // HPSIG_NORMAL_FORM_HPP_
