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

#ifndef HPSIG_DEFENSE_HPP_
#define HPSIG_DEFENSE_HPP_

#include <array>
#include <vector>

#include "hpsig/equilibrium.hpp"
#include "hpsig/game.hpp"
#include "hpsig/params.hpp"

namespace hpsig {

// Deployment description: N normal nodes, fixed normal-node signal rate gamma,
// and the prior perturbation delta used to keep the deployment off regime
// boundaries.
struct NetworkConfig {
  int normal_nodes = 0;  // N
  double gamma = 0;
  double delta = 0.01;
};

// Two evaluators for the per-regime limit utility: composed from the
// per-type equilibrium components, or the standalone closed forms.
enum class EvalRoute { kCompositional, kPrinted };

std::string_view RouteName(EvalRoute r);

// Network-average defender utility at prior p under a strategy profile:
// (p/(1-p)) * U_D(honeypot) + U_D(normal node), i.e. per normal node with
// M/N = p/(1-p) honeypots.
double NetworkAvgUtility(const UtilityParams& u, double p,
                         const DefenderStrategy& sd, const AttackerStrategy& sa);

// Per-type equilibrium utilities in regime j (1..3), as functions of gamma.
struct RegimeUtilities {
  double honeypot = 0;
  double normal_node = 0;
};

RegimeUtilities EquilibriumUtilityComponents(const UtilityParams& u, double gamma,
                                             int regime_index);

// Limit network-average utility when the prior approaches regime j's best
// boundary (p1 for j=1, p2 for j=2,3). Both routes are affine in gamma.
double UnetStarCompositional(const UtilityParams& u, double gamma, int regime_index);
double UnetStarPrinted(const UtilityParams& u, double gamma, int regime_index);
double UnetStar(const UtilityParams& u, double gamma, int regime_index, EvalRoute r);

// Honeypot-ratio plan: the best regime j*, the boundary prior p*, the
// delta-perturbed deployable prior, and the integer honeypot count for N
// normal nodes (rounded, then nudged so the realized prior stays inside the
// target regime).
struct DefensePlan {
  EvalRoute route = EvalRoute::kCompositional;
  int j_star = 0;
  bool tie = false;             // argmax tie, resolved toward larger j
  bool routes_disagree = false; // the other route picks a different j*
  std::array<double, 3> unet_by_regime{};
  double p_star = 0;
  double p_deployed = 0;
  double m_star_real = 0;
  int m_star = 0;
  double realized_prior = 0;
  DefenderStrategy sigma_d_star;
  double predicted_utility = 0;  // at p_deployed
};

DefensePlan OptimalPlan(const UtilityParams& u, const NetworkConfig& net,
                        EvalRoute route);

// One gamma grid point of the sweep plus the piecewise-linear upper envelope.
struct SweepRow {
  double gamma = 0;
  double unet1 = 0;
  double unet2 = 0;
  double unet3 = 0;
  int j_star = 0;
  double p_star = 0;
  double envelope = 0;
};

// Where the argmax regime changes between adjacent grid points; gamma/value
// are the exact intersection of the two affine pieces.
struct Crossover {
  double gamma = 0;
  double value = 0;
  int from_regime = 0;
  int to_regime = 0;
};

struct SweepResult {
  EvalRoute route = EvalRoute::kCompositional;
  std::vector<SweepRow> rows;
  std::vector<Crossover> crossovers;
};

SweepResult GammaSweep(const UtilityParams& u, const std::vector<double>& gammas,
                       EvalRoute route);

// Inclusive [start, stop] grid with the given step. Throws
// std::invalid_argument on a non-positive step or empty range.
std::vector<double> MakeGrid(double start, double stop, double step);

}  // namespace hpsig

#endif  // HPSIG_DEFENSE_HPP_
