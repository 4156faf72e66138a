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

#include "hpsig/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hpsig/equilibrium.hpp"
#include "hpsig/game.hpp"

namespace hpsig {
namespace {

AttackAction ActionOf(AttackerPure s, Signal m) {
  switch (s) {
    case AttackerPure::kAA:
      return AttackAction::kAttack;
    case AttackerPure::kAN:
      return m == Signal::kHigh ? AttackAction::kAttack
                                : AttackAction::kNotAttack;
    case AttackerPure::kNA:
      return m == Signal::kHigh ? AttackAction::kNotAttack
                                : AttackAction::kAttack;
    case AttackerPure::kNN:
      return AttackAction::kNotAttack;
  }
  return AttackAction::kNotAttack;
}

void RequireUnitClosed(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must be in [0,1], got " +
                                std::to_string(x));
  }
}

// Attacker expected payoff of a row when the honeypot sends H with rate x.
double RowValue(const NormalFormGame& g, int row, double x) {
  return x * g.attacker[row][0] + (1.0 - x) * g.attacker[row][1];
}

double ColValue(const NormalFormGame& g, const std::array<double, 4>& q,
                int col) {
  double v = 0.0;
  for (int r = 0; r < 4; ++r) v += q[r] * g.defender[r][col];
  return v;
}

}  // namespace

std::string_view ToString(AttackerPure s) {
  switch (s) {
    case AttackerPure::kAA:
      return "AA";
    case AttackerPure::kAN:
      return "AN";
    case AttackerPure::kNA:
      return "NA";
    case AttackerPure::kNN:
      return "NN";
  }
  return "?";
}

NormalFormGame InduceNormalForm(const UtilityParams& u, double p, double gamma) {
  RequireValidParams(u);
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("prior p must be in (0,1), got " +
                            std::to_string(p));
  }
  RequireUnitClosed(gamma, "gamma");

  NormalFormGame g;
  g.p = p;
  g.gamma = gamma;
  for (int row = 0; row < 4; ++row) {
    const AttackerPure s = kAttackerPures[row];
    for (int col = 0; col < 2; ++col) {
      const Signal honeypot_signal = (col == 0) ? Signal::kHigh : Signal::kLow;
      // The normal node keeps mixing with gamma, so each cell averages its
      // two signals; the honeypot contributes its column's pure signal.
      double def = p * PayoffDefender(u, DefenderType::kHoneypot,
                                      honeypot_signal,
                                      ActionOf(s, honeypot_signal));
      double att = p * PayoffAttacker(u, DefenderType::kHoneypot,
                                      honeypot_signal,
                                      ActionOf(s, honeypot_signal));
      for (Signal m : {Signal::kHigh, Signal::kLow}) {
        const double pm = (m == Signal::kHigh) ? gamma : 1.0 - gamma;
        def += (1.0 - p) * pm *
               PayoffDefender(u, DefenderType::kNormal, m, ActionOf(s, m));
        att += (1.0 - p) * pm *
               PayoffAttacker(u, DefenderType::kNormal, m, ActionOf(s, m));
      }
      g.defender[row][col] = def;
      g.attacker[row][col] = att;
    }
  }
  return g;
}

LineConstants ComputeLineConstants(const UtilityParams& u) {
  RequireValidParams(u);
  return {u.h * u.g * u.alpha - u.c_a, u.f * u.alpha + u.c_a,
          u.g * u.alpha - u.c_a, u.alpha + u.c_a};
}

double CriticalGamma(const UtilityParams& u) {
  const LineConstants lc = ComputeLineConstants(u);
  return lc.b1 / (lc.a1 + lc.b1);
}

std::array<PayoffLine, 4> AttackerLines(const UtilityParams& u, double gamma,
                                        double d1) {
  RequireValidParams(u);
  RequireUnitClosed(gamma, "gamma");
  RequireUnitClosed(d1, "d1");
  const LineConstants lc = ComputeLineConstants(u);
  const double high_stake = gamma * lc.a1;
  const double low_stake = (1.0 - gamma) * lc.b1;
  std::array<PayoffLine, 4> lines;
  lines[0] = {AttackerPure::kAA,
              -d1 * lc.a2 - (1.0 - d1) * lc.b2 - high_stake - low_stake,
              high_stake + low_stake};
  lines[1] = {AttackerPure::kAN, -d1 * lc.a2 - high_stake, high_stake};
  lines[2] = {AttackerPure::kNA, -low_stake - (1.0 - d1) * lc.b2, low_stake};
  lines[3] = {AttackerPure::kNN, 0.0, 0.0};
  return lines;
}

DegeneracyReport CheckDegeneracy(const UtilityParams& u, double gamma, double p,
                                 double margin) {
  RequireValidParams(u);
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("prior p must be in (0,1), got " +
                            std::to_string(p));
  }
  if (!(margin >= 0.0)) {
    throw std::invalid_argument("margin must be non-negative");
  }

  DegeneracyReport report;
  report.critical_gamma = CriticalGamma(u);
  report.gamma_degenerate = std::abs(gamma - report.critical_gamma) <= 1e-9;

  // Intersections are taken at the honeypot rates the planner can deploy:
  // the pure corners and the equilibrium mixing weight at the p2 boundary.
  const RegimeConstants rc = ComputeRegimeConstants(u, gamma);
  const double f1_star = ComputeMixingBounds(u, rc.p2, gamma).f1;
  for (double d1 : {0.0, 1.0, f1_star}) {
    const auto lines = AttackerLines(u, gamma, std::clamp(d1, 0.0, 1.0));
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const double ds = lines[i].slope - lines[j].slope;
        if (std::abs(ds) < 1e-12) continue;
        const double px = (lines[j].intercept - lines[i].intercept) / ds;
        if (px > 1e-9 && px < 1.0 - 1e-9) report.p_intersections.push_back(px);
      }
    }
  }
  std::sort(report.p_intersections.begin(), report.p_intersections.end());
  report.p_intersections.erase(
      std::unique(report.p_intersections.begin(), report.p_intersections.end(),
                  [](double a, double b) { return std::abs(a - b) <= 1e-9; }),
      report.p_intersections.end());

  report.nearest_distance = std::numeric_limits<double>::infinity();
  for (double px : report.p_intersections) {
    report.nearest_distance = std::min(report.nearest_distance,
                                       std::abs(p - px));
  }
  report.p_safe = report.nearest_distance >= margin;
  return report;
}

double PerturbedRatio(const UtilityParams& u, double gamma, double p_star,
                      double delta, int target_regime) {
  RequireValidParams(u);
  if (target_regime < 1 || target_regime > 3) {
    throw std::invalid_argument("target regime must be 1, 2 or 3");
  }
  if (!(delta > 0.0)) {
    throw std::invalid_argument("delta must be positive");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("gamma must be in (0,1)");
  }
  const double p = (target_regime == 3) ? p_star + delta : p_star - delta;
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("perturbed ratio " + std::to_string(p) +
                            " leaves (0,1)");
  }
  return p;
}

std::vector<NfEquilibrium> EnumerateEquilibria(const NormalFormGame& g,
                                               double tol) {
  std::vector<NfEquilibrium> found;

  auto emit = [&](double x, const std::array<double, 4>& q, bool component) {
    for (auto& e : found) {
      double dist = std::abs(e.defender_mix[0] - x);
      for (int r = 0; r < 4; ++r) {
        dist = std::max(dist, std::abs(e.attacker_mix[r] - q[r]));
      }
      if (dist <= 1e-7) {
        e.component = e.component || component;
        return;
      }
    }
    NfEquilibrium eq;
    eq.defender_mix = {x, 1.0 - x};
    eq.attacker_mix = q;
    eq.component = component;
    eq.attacker_value = 0.0;
    for (int r = 0; r < 4; ++r) {
      eq.attacker_value += q[r] * RowValue(g, r, x);
    }
    eq.defender_value = x * ColValue(g, q, 0) + (1.0 - x) * ColValue(g, q, 1);
    found.push_back(eq);
  };

  // Defender pure column, attacker best rows against it.
  for (int col = 0; col < 2; ++col) {
    const double x = (col == 0) ? 1.0 : 0.0;
    double vmax = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < 4; ++r) vmax = std::max(vmax, RowValue(g, r, x));
    std::vector<int> best_rows;
    for (int r = 0; r < 4; ++r) {
      if (RowValue(g, r, x) >= vmax - tol) best_rows.push_back(r);
    }
    for (int r : best_rows) {
      std::array<double, 4> q{};
      q[r] = 1.0;
      const double own = ColValue(g, q, col);
      const double other = ColValue(g, q, 1 - col);
      if (own >= other - tol) {
        // Several tied best rows make the attacker side a continuum.
        emit(x, q, best_rows.size() > 1);
      }
    }
  }

  // Defender strictly mixed; a regular equilibrium then needs exactly two
  // attacker rows tied on top, with the defender indifferent between columns.
  for (int r1 = 0; r1 < 4; ++r1) {
    for (int r2 = r1 + 1; r2 < 4; ++r2) {
      const double s1 = g.attacker[r1][0] - g.attacker[r1][1];
      const double s2 = g.attacker[r2][0] - g.attacker[r2][1];
      if (std::abs(s1 - s2) < 1e-14) continue;  // parallel in x
      // RowValue(r1, x) == RowValue(r2, x)
      const double x =
          (g.attacker[r2][1] - g.attacker[r1][1]) / (s1 - s2);
      if (x < tol || x > 1.0 - tol) continue;  // pure covered above
      const double v = RowValue(g, r1, x);
      bool top = true;
      bool tie_outside = false;
      for (int r = 0; r < 4; ++r) {
        if (r == r1 || r == r2) continue;
        const double rv = RowValue(g, r, x);
        if (rv > v + tol) top = false;
        if (std::abs(rv - v) <= tol) tie_outside = true;
      }
      if (!top) continue;
      const double d1 = g.defender[r1][0] - g.defender[r1][1];
      const double d2 = g.defender[r2][0] - g.defender[r2][1];
      if (std::abs(d1 - d2) < 1e-14) {
        if (std::abs(d2) > tol) continue;  // no mix makes columns equal
        // Defender indifferent for every split: a component.
        std::array<double, 4> q{};
        q[r1] = 0.5;
        q[r2] = 0.5;
        emit(x, q, true);
        continue;
      }
      const double w = d2 / (d2 - d1);  // weight on r1
      if (w < -tol || w > 1.0 + tol) continue;
      std::array<double, 4> q{};
      q[r1] = std::clamp(w, 0.0, 1.0);
      q[r2] = 1.0 - q[r1];
      emit(x, q, tie_outside);
    }
  }
  return found;
}

}  // namespace hpsig
