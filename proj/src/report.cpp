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

#include "hpsig/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hpsig {
namespace {

std::string FormatG(double x, int precision) {
  if (x == 0.0) {
    x = 0.0;  // normalize -0
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
  return buf;
}

nlohmann::json FiniteOrNull(double x) {
  if (std::isfinite(x)) {
    return x;
  }
  return nullptr;
}

}  // namespace

std::string FormatSig6(double x) { return FormatG(x, 6); }

std::string FormatCsv(double x) {
  if (!std::isfinite(x)) {
    return FormatG(x, 17);
  }
  if (x == std::floor(x) && std::fabs(x) < 9.007199254740992e15) {
    return std::to_string(static_cast<long long>(x));
  }
  // Shortest representation that parses back to the same double.
  for (int precision = 1; precision <= 17; ++precision) {
    std::string s = FormatG(x, precision);
    if (std::strtod(s.c_str(), nullptr) == x) {
      return s;
    }
  }
  return FormatG(x, 17);
}

nlohmann::json ToJson(const UtilityParams& u) {
  return {{"alpha", u.alpha}, {"beta", u.beta}, {"c_d", u.c_d},
          {"c_a", u.c_a},     {"f", u.f},       {"g", u.g},
          {"h", u.h}};
}

nlohmann::json ToJson(const GammaPbne& eq) {
  nlohmann::json j{
      {"p", eq.p},
      {"gamma", eq.gamma},
      {"regime", RegimeName(eq.regime)},
      {"sigma_d", {{"d1", eq.sigma_d.d1}, {"gamma", eq.sigma_d.gamma}}},
      {"attacker", {{"a_h", eq.attacker.a_h}, {"a_l", eq.attacker.a_l}}},
      {"belief",
       {{"mu_h", eq.belief.mu_h},
        {"mu_l", eq.belief.mu_l},
        {"off_path_h", eq.belief.off_path_h},
        {"off_path_l", eq.belief.off_path_l}}}};
  if (eq.attacker_interval.has_value()) {
    j["attacker_interval"] = {{"a_h_lo", eq.attacker_interval->a_h_lo},
                              {"a_h_hi", eq.attacker_interval->a_h_hi}};
  } else {
    j["attacker_interval"] = nullptr;
  }
  return j;
}

nlohmann::json ToJson(const DeviationReport& report) {
  return {{"tol", report.tol},
          {"defender_gain", report.defender_gain},
          {"attacker_gain", report.attacker_gain},
          {"posterior_error", report.posterior_error},
          {"max_gain", report.MaxGain()},
          {"ok", report.Ok()},
          {"findings", report.findings}};
}

nlohmann::json ToJson(const RegimeConstants& rc) {
  return {{"A", rc.A}, {"B", rc.B}, {"p1", rc.p1}, {"p2", rc.p2},
          {"p3", rc.p3}};
}

nlohmann::json ToJson(const MixingBounds& mb) {
  return {{"f1", mb.f1}, {"f2", mb.f2}};
}

nlohmann::json ToJson(const DefensePlan& plan) {
  return {{"route", RouteName(plan.route)},
          {"j_star", plan.j_star},
          {"tie", plan.tie},
          {"routes_disagree", plan.routes_disagree},
          {"unet_by_regime",
           {plan.unet_by_regime[0], plan.unet_by_regime[1],
            plan.unet_by_regime[2]}},
          {"p_star", plan.p_star},
          {"p_deployed", plan.p_deployed},
          {"m_star_real", plan.m_star_real},
          {"m_star", plan.m_star},
          {"realized_prior", plan.realized_prior},
          {"sigma_d_star",
           {{"d1", plan.sigma_d_star.d1}, {"gamma", plan.sigma_d_star.gamma}}},
          {"predicted_utility", plan.predicted_utility}};
}

nlohmann::json ToJson(const SweepResult& sweep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& r : sweep.rows) {
    rows.push_back({{"gamma", r.gamma},
                    {"unet1", r.unet1},
                    {"unet2", r.unet2},
                    {"unet3", r.unet3},
                    {"j_star", r.j_star},
                    {"p_star", r.p_star},
                    {"envelope", r.envelope}});
  }
  nlohmann::json crossovers = nlohmann::json::array();
  for (const Crossover& c : sweep.crossovers) {
    crossovers.push_back({{"gamma", c.gamma},
                          {"value", c.value},
                          {"from_regime", c.from_regime},
                          {"to_regime", c.to_regime}});
  }
  return {{"route", RouteName(sweep.route)},
          {"rows", rows},
          {"crossovers", crossovers}};
}

nlohmann::json ToJson(const DegeneracyReport& report) {
  return {{"gamma_degenerate", report.gamma_degenerate},
          {"critical_gamma", report.critical_gamma},
          {"p_intersections", report.p_intersections},
          {"nearest_distance", FiniteOrNull(report.nearest_distance)},
          {"p_safe", report.p_safe}};
}

nlohmann::json ToJson(const NormalFormGame& g) {
  nlohmann::json defender = nlohmann::json::array();
  nlohmann::json attacker = nlohmann::json::array();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < kAttackerPures.size(); ++r) {
    rows.push_back(ToString(kAttackerPures[r]));
    defender.push_back({g.defender[r][0], g.defender[r][1]});
    attacker.push_back({g.attacker[r][0], g.attacker[r][1]});
  }
  return {{"p", g.p},
          {"gamma", g.gamma},
          {"rows", rows},
          {"cols", {"H", "L"}},
          {"defender", defender},
          {"attacker", attacker}};
}

nlohmann::json ToJson(const NfEquilibrium& eq) {
  return {{"defender_mix", {eq.defender_mix[0], eq.defender_mix[1]}},
          {"attacker_mix",
           {eq.attacker_mix[0], eq.attacker_mix[1], eq.attacker_mix[2],
            eq.attacker_mix[3]}},
          {"defender_value", eq.defender_value},
          {"attacker_value", eq.attacker_value},
          {"component", eq.component},
          {"d1", eq.D1()},
          {"attack_after_high", eq.AttackAfterHigh()},
          {"attack_after_low", eq.AttackAfterLow()}};
}

nlohmann::json ToJson(const FpSummary& summary) {
  const FpConfig& c = summary.config;
  return {{"config",
           {{"p", c.p},
            {"gamma", c.gamma},
            {"rounds", c.rounds},
            {"seed", c.seed},
            {"init_estimate", c.init_estimate},
            {"pseudo_count", c.pseudo_count},
            {"randomize_init", c.randomize_init},
            {"clamp_estimate", c.clamp_estimate},
            {"tie_break",
             c.tie_break == TieBreak::kUniformRandom ? "uniform-random"
                                                     : "prefer-first"},
            {"thinning", c.thinning}}},
          {"rounds", summary.rounds},
          {"theta1_rounds", summary.theta1_rounds},
          {"theta2_rounds", summary.theta2_rounds},
          {"final_sigma_hat_d_h", summary.final_sigma_hat_d_h},
          {"final_sigma_hat_a_h", summary.final_sigma_hat_a_h},
          {"final_sigma_hat_a_l", summary.final_sigma_hat_a_l},
          {"final_mu_h", summary.final_mu_h},
          {"final_mu_l", summary.final_mu_l},
          {"final_running_unet", summary.final_running_unet},
          {"utility_conclusive", summary.utility_conclusive}};
}

std::string SweepCsv(const SweepResult& sweep) {
  std::ostringstream os;
  os << "gamma,unet1,unet2,unet3,j_star,p_star,envelope\n";
  for (const SweepRow& r : sweep.rows) {
    os << FormatCsv(r.gamma) << ',' << FormatCsv(r.unet1) << ','
       << FormatCsv(r.unet2) << ',' << FormatCsv(r.unet3) << ',' << r.j_star
       << ',' << FormatCsv(r.p_star) << ',' << FormatCsv(r.envelope) << '\n';
  }
  return os.str();
}

std::string NormalFormPayoffCsv(const NormalFormGame& g, bool attacker) {
  std::ostringstream os;
  os << "row,H,L\n";
  for (std::size_t r = 0; r < kAttackerPures.size(); ++r) {
    const auto& cells = attacker ? g.attacker[r] : g.defender[r];
    os << ToString(kAttackerPures[r]) << ',' << FormatCsv(cells[0]) << ','
       << FormatCsv(cells[1]) << '\n';
  }
  return os.str();
}

std::string AttackerLinesCsv(const std::array<PayoffLine, 4>& lines) {
  std::ostringstream os;
  os << "label,slope,intercept\n";
  for (const PayoffLine& line : lines) {
    os << ToString(line.label) << ',' << FormatCsv(line.slope) << ','
       << FormatCsv(line.intercept) << '\n';
  }
  return os.str();
}

std::string TrajectoryCsv(const FpRunResult& run,
                          const ConvergenceReport& conv) {
  if (conv.distances.size() != run.records.size()) {
    throw std::invalid_argument(
        "trajectory: convergence report does not match the run's records");
  }
  std::ostringstream os;
  os << "t,type,signal,action,sigma_hat_D_H,sigma_hat_A_H,sigma_hat_A_L,"
        "mu_H,mu_L,running_unet,dist_to_eq\n";
  for (std::size_t i = 0; i < run.records.size(); ++i) {
    const FpRecord& rec = run.records[i];
    os << rec.t << ',' << ToString(rec.type) << ',' << ToString(rec.signal)
       << ',' << ToString(rec.action) << ',' << FormatCsv(rec.sigma_hat_d_h)
       << ',' << FormatCsv(rec.sigma_hat_a_h) << ','
       << FormatCsv(rec.sigma_hat_a_l) << ',' << FormatCsv(rec.mu_h) << ','
       << FormatCsv(rec.mu_l) << ',' << FormatCsv(rec.running_unet) << ','
       << FormatCsv(conv.distances[i]) << '\n';
  }
  return os.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::error_code ec;
  if (target.has_parent_path()) {
    std::filesystem::create_directories(target.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory " +
                    target.parent_path().string() + ": " + ec.message());
    }
  }
  std::ofstream out(target, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  out.write(content.data(),
            static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw IoError("failed writing " + path);
  }
}

}  // namespace hpsig
