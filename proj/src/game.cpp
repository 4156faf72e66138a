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

#include "hpsig/game.hpp"

#include <stdexcept>
#include <string>

namespace hpsig {
namespace {

void RequireUnit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must be in [0,1], got " +
                                std::to_string(x));
  }
}

}  // namespace

std::string_view ToString(DefenderType t) {
  return t == DefenderType::kHoneypot ? "theta1" : "theta2";
}

std::string_view ToString(Signal m) { return m == Signal::kHigh ? "H" : "L"; }

std::string_view ToString(AttackAction a) {
  return a == AttackAction::kAttack ? "A" : "N";
}

double PayoffDefender(const UtilityParams& u, DefenderType t, Signal m,
                      AttackAction a) {
  const bool high = (m == Signal::kHigh);
  const bool attacked = (a == AttackAction::kAttack);
  if (t == DefenderType::kHoneypot) {
    // A honeypot always pays beta, pays c_d while advertising H, and earns
    // the capture value when attacked.
    double payoff = -u.beta - (high ? u.c_d : 0.0);
    if (attacked) payoff += high ? u.f * u.alpha : u.alpha;
    return payoff;
  }
  // A normal node only loses, and only when attacked; an H front raises the
  // damage by h.
  if (!attacked) return 0.0;
  return high ? -u.h * u.g * u.alpha : -u.g * u.alpha;
}

double PayoffAttacker(const UtilityParams& u, DefenderType t, Signal m,
                      AttackAction a) {
  if (a == AttackAction::kNotAttack) return 0.0;
  const bool high = (m == Signal::kHigh);
  if (t == DefenderType::kHoneypot) {
    return (high ? -u.f * u.alpha : -u.alpha) - u.c_a;
  }
  return (high ? u.h * u.g * u.alpha : u.g * u.alpha) - u.c_a;
}

double ExpectedUtilityDefender(const UtilityParams& u, const DefenderStrategy& sd,
                               const AttackerStrategy& sa, DefenderType t) {
  RequireUnit(sd.d1, "d1");
  RequireUnit(sd.gamma, "gamma");
  RequireUnit(sa.a_h, "a_h");
  RequireUnit(sa.a_l, "a_l");
  const double high = (t == DefenderType::kHoneypot) ? sd.d1 : sd.gamma;
  double total = 0.0;
  for (Signal m : {Signal::kHigh, Signal::kLow}) {
    const double pm = (m == Signal::kHigh) ? high : 1.0 - high;
    const double pa = (m == Signal::kHigh) ? sa.a_h : sa.a_l;
    total += pm * (pa * PayoffDefender(u, t, m, AttackAction::kAttack) +
                   (1.0 - pa) * PayoffDefender(u, t, m, AttackAction::kNotAttack));
  }
  return total;
}

double ExpectedUtilityAttacker(const UtilityParams& u, const AttackerStrategy& sa,
                               DefenderType t, Signal m) {
  RequireUnit(sa.a_h, "a_h");
  RequireUnit(sa.a_l, "a_l");
  const double pa = (m == Signal::kHigh) ? sa.a_h : sa.a_l;
  return pa * PayoffAttacker(u, t, m, AttackAction::kAttack);
}

Belief PosteriorBeliefs(double p, double d1, double gamma,
                        double off_path_value) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("prior p must be in (0,1), got " +
                            std::to_string(p));
  }
  RequireUnit(d1, "d1");
  RequireUnit(gamma, "gamma");

  Belief belief;
  const double pr_high = p * d1 + (1.0 - p) * gamma;
  if (pr_high > 0.0) {
    belief.mu_h = p * d1 / pr_high;
  } else {
    belief.mu_h = off_path_value;
    belief.off_path_h = true;
  }
  const double pr_low = p * (1.0 - d1) + (1.0 - p) * (1.0 - gamma);
  if (pr_low > 0.0) {
    belief.mu_l = p * (1.0 - d1) / pr_low;
  } else {
    belief.mu_l = off_path_value;
    belief.off_path_l = true;
  }
  return belief;
}

}  // namespace hpsig
