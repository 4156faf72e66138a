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

#include "hpsig/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hpsig {
namespace {

void RequireInteriorPrior(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("prior p must be in (0,1), got " +
                            std::to_string(p));
  }
}

void RequireInteriorGamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("gamma must be in (0,1), got " +
                                std::to_string(gamma));
  }
}

Regime Classify(const RegimeConstants& rc, double p, double tol) {
  if (std::abs(p - rc.p1) <= tol) return Regime::kBoundaryP1;
  if (std::abs(p - rc.p2) <= tol) return Regime::kBoundaryP2;
  if (p < rc.p1) return Regime::kI;
  if (p < rc.p2) return Regime::kII;
  return Regime::kIII;
}

}  // namespace

std::string_view RegimeName(Regime r) {
  switch (r) {
    case Regime::kI:
      return "I";
    case Regime::kII:
      return "II";
    case Regime::kIII:
      return "III";
    case Regime::kBoundaryP1:
      return "boundary-p1";
    case Regime::kBoundaryP2:
      return "boundary-p2";
  }
  return "?";
}

int RegimeIndex(Regime r) {
  switch (r) {
    case Regime::kI:
    case Regime::kBoundaryP1:
      return 1;
    case Regime::kII:
    case Regime::kBoundaryP2:
      return 2;
    case Regime::kIII:
      return 3;
  }
  return 0;
}

RegimeConstants ComputeRegimeConstants(const UtilityParams& u, double gamma) {
  RequireValidParams(u);
  RequireInteriorGamma(gamma);
  const double a1 = u.h * u.g * u.alpha - u.c_a;
  const double a2 = u.f * u.alpha + u.c_a;
  const double b1 = u.g * u.alpha - u.c_a;
  const double b2 = u.alpha + u.c_a;
  RegimeConstants rc;
  rc.A = a1 / a2;
  rc.B = b1 / b2;
  const double x1 = rc.A * gamma;
  const double x2 = rc.A * gamma + rc.B * (1.0 - gamma);
  rc.p1 = x1 / (1.0 + x1);
  rc.p2 = x2 / (1.0 + x2);
  rc.p3 = (1.0 - gamma) * b1 / ((1.0 - gamma) * b1 + b2);
  return rc;
}

MixingBounds ComputeMixingBounds(const UtilityParams& u, double p, double gamma) {
  RequireValidParams(u);
  RequireInteriorPrior(p);
  RequireInteriorGamma(gamma);
  const RegimeConstants rc = ComputeRegimeConstants(u, gamma);
  const double odds = (1.0 - p) / p;
  MixingBounds mb;
  mb.f1 = rc.A * odds * gamma;
  mb.f2 = 1.0 - rc.B * odds * (1.0 - gamma);
  return mb;
}

double AttackIndifferenceBelief(const UtilityParams& u, Signal m) {
  const double gain = (m == Signal::kHigh) ? u.h * u.g * u.alpha - u.c_a
                                           : u.g * u.alpha - u.c_a;
  const double loss = (m == Signal::kHigh) ? u.f * u.alpha + u.c_a
                                           : u.alpha + u.c_a;
  return gain / (gain + loss);
}

double BoundaryP2InducedAttackAfterLow(const UtilityParams& u, double a_h) {
  return u.f * a_h - u.c_d / u.alpha;
}

PurePbneResult SolvePurePbne(const UtilityParams& u, double p, double gamma) {
  RequireValidParams(u);
  RequireInteriorPrior(p);
  RequireInteriorGamma(gamma);
  const RegimeConstants rc = ComputeRegimeConstants(u, gamma);
  PurePbneResult result;
  if (p > rc.p1 + kDefaultBoundaryTol) {
    std::ostringstream os;
    os << "no pure equilibrium for p > p1 (p1 = " << rc.p1 << ")";
    result.reason = os.str();
    return result;
  }
  GammaPbne eq;
  eq.p = p;
  eq.gamma = gamma;
  eq.regime = Classify(rc, p, kDefaultBoundaryTol);
  eq.sigma_d = {1.0, gamma};
  eq.attacker = {1.0, 1.0};
  eq.belief = PosteriorBeliefs(p, 1.0, gamma);
  result.profile = eq;
  return result;
}

GammaPbne SolveMixedPbne(const UtilityParams& u, double p, double gamma,
                         double boundary_tol) {
  RequireValidParams(u);
  RequireInteriorPrior(p);
  RequireInteriorGamma(gamma);
  const RegimeConstants rc = ComputeRegimeConstants(u, gamma);
  const double a_h_high = (u.alpha + u.c_d) / (u.f * u.alpha);
  const double a_h_low = u.c_d / (u.f * u.alpha);

  GammaPbne eq;
  eq.p = p;
  eq.gamma = gamma;
  eq.regime = Classify(rc, p, boundary_tol);
  switch (eq.regime) {
    case Regime::kI:
      eq.sigma_d = {1.0, gamma};
      eq.attacker = {1.0, 1.0};
      break;
    case Regime::kII:
      eq.sigma_d = {ComputeMixingBounds(u, p, gamma).f1, gamma};
      eq.attacker = {a_h_high, 1.0};
      break;
    case Regime::kIII:
      eq.sigma_d = {ComputeMixingBounds(u, p, gamma).f1, gamma};
      eq.attacker = {a_h_low, 0.0};
      break;
    case Regime::kBoundaryP1: {
      eq.sigma_d = {1.0, gamma};
      eq.attacker_interval = AttackerMixInterval{a_h_high, 1.0};
      const double mid = 0.5 * (a_h_high + 1.0);
      eq.attacker = {mid, 1.0};
      break;
    }
    case Regime::kBoundaryP2: {
      const double d1 =
          std::min(1.0, ComputeMixingBounds(u, p, gamma).f1);
      eq.sigma_d = {d1, gamma};
      eq.attacker_interval = AttackerMixInterval{a_h_low, a_h_high};
      const double mid = 0.5 * (a_h_low + a_h_high);
      eq.attacker = {mid, BoundaryP2InducedAttackAfterLow(u, mid)};
      break;
    }
  }
  eq.belief = PosteriorBeliefs(p, eq.sigma_d.d1, gamma);
  return eq;
}

double DeviationReport::MaxGain() const {
  return std::max(defender_gain, attacker_gain);
}

bool DeviationReport::Ok() const { return Ok(tol); }

bool DeviationReport::Ok(double bound) const {
  return MaxGain() <= bound && posterior_error <= bound;
}

DeviationReport VerifyEquilibrium(const UtilityParams& u, double p, double gamma,
                                  const GammaPbne& eq, double tol,
                                  double grid_step) {
  RequireValidParams(u);
  RequireInteriorPrior(p);
  RequireInteriorGamma(gamma);
  if (!(grid_step > 0.0 && grid_step <= 0.5)) {
    throw std::invalid_argument("grid_step must be in (0, 0.5]");
  }

  DeviationReport report;
  report.tol = tol;
  const long long n = std::llround(1.0 / grid_step);

  // Honeypot deviations in d1 against the attacker's (point) strategy. At
  // boundary priors the point is the interval midpoint, which keeps the
  // honeypot indifferent wherever the interval is an equilibrium set.
  {
    const double base = ExpectedUtilityDefender(
        u, {eq.sigma_d.d1, gamma}, eq.attacker, DefenderType::kHoneypot);
    double best = base;
    double best_d1 = eq.sigma_d.d1;
    for (long long i = 0; i <= n; ++i) {
      const double d1 = std::min(1.0, i * grid_step);
      const double v = ExpectedUtilityDefender(u, {d1, gamma}, eq.attacker,
                                               DefenderType::kHoneypot);
      if (v > best) {
        best = v;
        best_d1 = d1;
      }
    }
    report.defender_gain = std::max(0.0, best - base);
    if (report.defender_gain > tol) {
      std::ostringstream os;
      os << "honeypot gains " << report.defender_gain << " by moving d1 from "
         << eq.sigma_d.d1 << " to " << best_d1;
      report.findings.push_back(os.str());
    }
  }

  // Attacker deviations per signal under the profile's beliefs. The grid runs
  // over attack probabilities; with linear payoffs the max sits at a corner,
  // but the scan stays independent of that argument. At boundaries every
  // point of the interval must be optimal, so the endpoints are checked too.
  {
    double worst = 0.0;
    for (Signal m : {Signal::kHigh, Signal::kLow}) {
      const bool high = (m == Signal::kHigh);
      const double mu = high ? eq.belief.mu_h : eq.belief.mu_l;
      const double attack_value =
          mu * PayoffAttacker(u, DefenderType::kHoneypot, m,
                              AttackAction::kAttack) +
          (1.0 - mu) * PayoffAttacker(u, DefenderType::kNormal, m,
                                      AttackAction::kAttack);
      double best = 0.0;
      for (long long i = 0; i <= n; ++i) {
        const double a = std::min(1.0, i * grid_step);
        best = std::max(best, a * attack_value);
      }
      std::vector<double> rates;
      rates.push_back(high ? eq.attacker.a_h : eq.attacker.a_l);
      if (eq.attacker_interval) {
        const auto& iv = *eq.attacker_interval;
        if (high) {
          rates.push_back(iv.a_h_lo);
          rates.push_back(iv.a_h_hi);
        } else if (eq.regime == Regime::kBoundaryP2) {
          rates.push_back(BoundaryP2InducedAttackAfterLow(u, iv.a_h_lo));
          rates.push_back(BoundaryP2InducedAttackAfterLow(u, iv.a_h_hi));
        }
      }
      for (double a : rates) {
        const double gain = std::max(0.0, best - a * attack_value);
        if (gain > worst) worst = gain;
        if (gain > tol) {
          std::ostringstream os;
          os << "attacker gains " << gain << " after " << ToString(m)
             << " (attack rate " << a << ", attack value " << attack_value
             << ")";
          report.findings.push_back(os.str());
        }
      }
    }
    report.attacker_gain = worst;
  }

  // Bayes consistency of the stored posteriors for on-path signals.
  {
    const Belief bayes = PosteriorBeliefs(p, eq.sigma_d.d1, gamma);
    double err = 0.0;
    if (!bayes.off_path_h) err = std::abs(eq.belief.mu_h - bayes.mu_h);
    if (!bayes.off_path_l) {
      err = std::max(err, std::abs(eq.belief.mu_l - bayes.mu_l));
    }
    report.posterior_error = err;
    if (err > tol) {
      std::ostringstream os;
      os << "stored posteriors deviate from Bayes by " << err;
      report.findings.push_back(os.str());
    }
  }
  return report;
}

}  // namespace hpsig
