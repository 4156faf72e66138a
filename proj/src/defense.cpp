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

#include "hpsig/defense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hpsig/normal_form.hpp"

namespace hpsig {
namespace {

constexpr double kTieTol = 1e-12;

void RequireRegimeIndex(int j) {
  if (j < 1 || j > 3) {
    throw std::invalid_argument("regime index must be 1, 2 or 3, got " +
                                std::to_string(j));
  }
}

// p_j/(1-p_j) without the round trip through p_j itself.
double LimitOdds(const UtilityParams& u, double gamma, int j) {
  const LineConstants lc = ComputeLineConstants(u);
  const double a = lc.a1 / lc.a2;
  const double b = lc.b1 / lc.b2;
  return (j == 1) ? a * gamma : a * gamma + b * (1.0 - gamma);
}

int ArgmaxRegime(const double (&v)[3], bool* tie) {
  int best = 1;
  for (int j = 2; j <= 3; ++j) {
    if (v[j - 1] >= v[best - 1] - kTieTol) best = j;
  }
  if (tie != nullptr) {
    *tie = false;
    for (int j = 1; j <= 3; ++j) {
      if (j != best && std::abs(v[j - 1] - v[best - 1]) <= kTieTol) *tie = true;
    }
  }
  return best;
}

bool InsideRegime(const RegimeConstants& rc, double p, int j) {
  switch (j) {
    case 1:
      return p > 0.0 && p < rc.p1;
    case 2:
      return p > rc.p1 && p < rc.p2;
    default:
      return p > rc.p2 && p < 1.0;
  }
}

}  // namespace

std::string_view RouteName(EvalRoute r) {
  return r == EvalRoute::kCompositional ? "compositional" : "printed";
}

double NetworkAvgUtility(const UtilityParams& u, double p,
                         const DefenderStrategy& sd, const AttackerStrategy& sa) {
  RequireValidParams(u);
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("prior p must be in (0,1), got " +
                            std::to_string(p));
  }
  const double honeypot =
      ExpectedUtilityDefender(u, sd, sa, DefenderType::kHoneypot);
  const double normal = ExpectedUtilityDefender(u, sd, sa, DefenderType::kNormal);
  return (p / (1.0 - p)) * honeypot + normal;
}

RegimeUtilities EquilibriumUtilityComponents(const UtilityParams& u, double gamma,
                                             int j) {
  RequireValidParams(u);
  RequireRegimeIndex(j);
  const double ga = u.g * u.alpha;
  switch (j) {
    case 1:
      return {-u.beta - u.c_d + u.f * u.alpha, gamma * (ga - u.h * ga) - ga};
    case 2:
      return {u.alpha - u.beta,
              gamma * (ga - (u.alpha + u.c_d) * u.h * u.g / u.f) - ga};
    default:
      return {-u.beta, -(u.h * u.g * u.c_d / u.f) * gamma};
  }
}

double UnetStarCompositional(const UtilityParams& u, double gamma, int j) {
  const RegimeUtilities c = EquilibriumUtilityComponents(u, gamma, j);
  return LimitOdds(u, gamma, j) * c.honeypot + c.normal_node;
}

double UnetStarPrinted(const UtilityParams& u, double gamma, int j) {
  RequireValidParams(u);
  RequireRegimeIndex(j);
  const double fa = u.f * u.alpha;
  const double ga = u.g * u.alpha;
  const double hga = u.h * ga;
  switch (j) {
    case 1:
      return ((fa - u.h * u.c_a) * ga + (u.beta + u.c_d) * (u.c_a - hga)) /
                 (fa + u.c_a) * gamma -
             ga;
    case 2: {
      const double slope = ((hga - u.c_a) / (fa + u.c_a) -
                            (ga - u.c_a) / (u.alpha + u.c_a)) *
                               (u.alpha - u.beta) +
                           ga - (u.alpha + u.c_d) / u.f * u.h * u.g;
      const double intercept =
          (u.c_a * (u.beta - u.alpha - ga) - ga * u.beta) / (u.alpha + u.c_a);
      return slope * gamma + intercept;
    }
    default: {
      const double slope = u.beta * ((ga - u.c_a) / (u.alpha + u.c_a) -
                                     (hga - u.c_a) / (fa + u.c_a)) -
                           u.h * u.g * u.c_d / u.f;
      const double intercept = -u.beta * (ga - u.c_a) / (u.alpha + u.c_a);
      return slope * gamma + intercept;
    }
  }
}

double UnetStar(const UtilityParams& u, double gamma, int j, EvalRoute r) {
  return r == EvalRoute::kCompositional ? UnetStarCompositional(u, gamma, j)
                                        : UnetStarPrinted(u, gamma, j);
}

DefensePlan OptimalPlan(const UtilityParams& u, const NetworkConfig& net,
                        EvalRoute route) {
  RequireValidParams(u);
  if (net.normal_nodes < 1) {
    throw std::invalid_argument("N must be at least 1");
  }
  if (!(net.gamma > 0.0 && net.gamma < 1.0)) {
    throw std::invalid_argument("gamma must be in (0,1)");
  }
  if (!(net.delta > 0.0)) {
    throw std::invalid_argument("delta must be positive");
  }

  DefensePlan plan;
  plan.route = route;
  double mine[3];
  double other[3];
  const EvalRoute alt = route == EvalRoute::kCompositional
                            ? EvalRoute::kPrinted
                            : EvalRoute::kCompositional;
  for (int j = 1; j <= 3; ++j) {
    mine[j - 1] = UnetStar(u, net.gamma, j, route);
    other[j - 1] = UnetStar(u, net.gamma, j, alt);
    plan.unet_by_regime[j - 1] = mine[j - 1];
  }
  plan.j_star = ArgmaxRegime(mine, &plan.tie);
  plan.routes_disagree = (ArgmaxRegime(other, nullptr) != plan.j_star);

  const RegimeConstants rc = ComputeRegimeConstants(u, net.gamma);
  plan.p_star = (plan.j_star == 1) ? rc.p1 : rc.p2;
  plan.p_deployed =
      PerturbedRatio(u, net.gamma, plan.p_star, net.delta, plan.j_star);

  const int n = net.normal_nodes;
  plan.m_star_real = plan.p_deployed * n / (1.0 - plan.p_deployed);
  long long m = std::llround(plan.m_star_real);
  // Nudge the integer count until the realized prior sits strictly inside the
  // target regime; one step is enough except when rounding lands on the rim.
  for (int attempts = 0; attempts < n + 2; ++attempts) {
    if (m < 0) m = 0;
    const double realized = static_cast<double>(m) / (m + n);
    if (m > 0 && InsideRegime(rc, realized, plan.j_star)) break;
    if (plan.j_star == 3) {
      ++m;
    } else {
      m += (realized <= (plan.j_star == 1 ? 0.0 : rc.p1)) ? 1 : -1;
    }
    if (m < 0 || attempts == n + 1) {
      throw ValidationError(
          "no integer honeypot count keeps the realized prior inside the "
          "target regime for N = " +
          std::to_string(n));
    }
  }
  plan.m_star = static_cast<int>(m);
  plan.realized_prior = static_cast<double>(m) / (m + n);

  plan.sigma_d_star = {
      std::min(1.0, ComputeMixingBounds(u, plan.p_star, net.gamma).f1),
      net.gamma};
  const GammaPbne eq = SolveMixedPbne(u, plan.p_deployed, net.gamma);
  plan.predicted_utility =
      NetworkAvgUtility(u, plan.p_deployed, eq.sigma_d, eq.attacker);
  return plan;
}

SweepResult GammaSweep(const UtilityParams& u, const std::vector<double>& gammas,
                       EvalRoute route) {
  RequireValidParams(u);
  if (gammas.empty()) {
    throw std::invalid_argument("gamma grid is empty");
  }
  SweepResult result;
  result.route = route;
  result.rows.reserve(gammas.size());
  for (double gamma : gammas) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
      throw std::invalid_argument("sweep gamma must be in (0,1), got " +
                                  std::to_string(gamma));
    }
    SweepRow row;
    row.gamma = gamma;
    double v[3];
    for (int j = 1; j <= 3; ++j) v[j - 1] = UnetStar(u, gamma, j, route);
    row.unet1 = v[0];
    row.unet2 = v[1];
    row.unet3 = v[2];
    row.j_star = ArgmaxRegime(v, nullptr);
    const RegimeConstants rc = ComputeRegimeConstants(u, gamma);
    row.p_star = (row.j_star == 1) ? rc.p1 : rc.p2;
    row.envelope = std::max({v[0], v[1], v[2]});
    result.rows.push_back(row);
  }

  // The per-regime curves are affine in gamma, so a change of argmax between
  // grid points pins an exact line intersection.
  for (std::size_t i = 0; i + 1 < result.rows.size(); ++i) {
    const SweepRow& a = result.rows[i];
    const SweepRow& b = result.rows[i + 1];
    if (a.j_star == b.j_star) continue;
    auto value = [&](int j, double gamma) { return UnetStar(u, gamma, j, route); };
    const double dg = b.gamma - a.gamma;
    const double slope_a = (value(a.j_star, b.gamma) - value(a.j_star, a.gamma)) / dg;
    const double slope_b = (value(b.j_star, b.gamma) - value(b.j_star, a.gamma)) / dg;
    if (std::abs(slope_a - slope_b) < 1e-15) continue;
    const double va = value(a.j_star, a.gamma);
    const double vb = value(b.j_star, a.gamma);
    double gx = a.gamma + (vb - va) / (slope_a - slope_b);
    gx = std::clamp(gx, a.gamma, b.gamma);
    result.crossovers.push_back(
        {gx, value(a.j_star, gx), a.j_star, b.j_star});
  }
  return result;
}

std::vector<double> MakeGrid(double start, double stop, double step) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("grid step must be positive");
  }
  if (stop < start) {
    throw std::invalid_argument("grid stop is below start");
  }
  std::vector<double> grid;
  const long long n = std::llround((stop - start) / step);
  for (long long i = 0; i <= n; ++i) {
    const double g = start + i * step;
    if (g <= stop + 1e-12) grid.push_back(std::min(g, stop));
  }
  return grid;
}

}  // namespace hpsig
