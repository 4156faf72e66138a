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

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hpsig/defense.hpp"
#include "hpsig/equilibrium.hpp"
#include "hpsig/fictitious_play.hpp"
#include "hpsig/game.hpp"
#include "hpsig/normal_form.hpp"
#include "hpsig/params.hpp"
#include "hpsig/report.hpp"
#include "hpsig/run_config.hpp"

namespace {

using namespace hpsig;

struct CommonArgs {
  std::string config_path;
  std::string format = "text";
  std::optional<std::string> out_dir;
};

bool JsonOut(const CommonArgs& args) { return args.format == "json"; }

EvalRoute ParseRoute(const std::string& name) {
  if (name == "compositional") {
    return EvalRoute::kCompositional;
  }
  if (name == "printed") {
    return EvalRoute::kPrinted;
  }
  throw UsageError("route must be compositional or printed, got '" + name +
                   "'");
}

std::optional<std::string> OutDir(const CommonArgs& args,
                                  const RunConfig& config) {
  if (args.out_dir.has_value()) {
    return args.out_dir;
  }
  return config.out_dir;
}

void Emit(const std::string& dir, const std::string& name,
          const std::string& content) {
  const auto path = std::filesystem::path(dir) / name;
  WriteFile(path.string(), content);
  std::cerr << "wrote " << path.string() << "\n";
}

void AddCommon(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("-c,--config", args->config_path, "run configuration file")
      ->required();
  cmd->add_option("--format", args->format, "stdout format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option_function<std::string>(
      "-o,--out", [args](const std::string& dir) { args->out_dir = dir; },
      "directory for result files");
}

int CmdValidate(const CommonArgs& args) {
  const RunConfig config = LoadRunConfig(args.config_path);
  const ParamReport report = ValidateParams(config.params);
  if (JsonOut(args)) {
    nlohmann::json violations = nlohmann::json::array();
    for (const ConstraintViolation& v : report.violations) {
      violations.push_back({{"name", v.name}, {"detail", v.detail}});
    }
    nlohmann::json j{{"params", ToJson(config.params)},
                     {"ok", report.ok()},
                     {"violations", violations}};
    std::cout << j.dump(2) << "\n";
  } else if (report.ok()) {
    std::cout << "parameters ok\n";
  } else {
    for (const ConstraintViolation& v : report.violations) {
      std::cout << "violated: " << v.name << " (" << v.detail << ")\n";
    }
  }
  return report.ok() ? 0 : 1;
}

int CmdSolve(const CommonArgs& args) {
  const RunConfig config = LoadRunConfig(args.config_path);
  RequireValidParams(config.params);
  const UtilityParams& u = config.params;
  const double gamma = RequireGamma(config);
  const double p = EffectivePrior(config);

  const RegimeConstants rc = ComputeRegimeConstants(u, gamma);
  const MixingBounds mb = ComputeMixingBounds(u, p, gamma);
  const PurePbneResult pure = SolvePurePbne(u, p, gamma);
  const GammaPbne eq = SolveMixedPbne(u, p, gamma);
  const DeviationReport check = VerifyEquilibrium(u, p, gamma, eq);

  if (JsonOut(args)) {
    nlohmann::json j{{"params", ToJson(u)},
                     {"p", p},
                     {"gamma", gamma},
                     {"constants", ToJson(rc)},
                     {"mixing_bounds", ToJson(mb)},
                     {"equilibrium", ToJson(eq)},
                     {"verification", ToJson(check)}};
    if (pure.profile.has_value()) {
      j["pure"] = ToJson(*pure.profile);
    } else {
      j["pure"] = {{"exists", false}, {"reason", pure.reason}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "p: " << FormatSig6(p) << "  gamma: " << FormatSig6(gamma)
              << "\n"
              << "thresholds: p1=" << FormatSig6(rc.p1)
              << " p2=" << FormatSig6(rc.p2) << " p3=" << FormatSig6(rc.p3)
              << "\n"
              << "regime: " << RegimeName(eq.regime) << "\n"
              << "defender: P(H|honeypot)=" << FormatSig6(eq.sigma_d.d1)
              << "\n"
              << "attacker: P(A|H)=" << FormatSig6(eq.attacker.a_h)
              << " P(A|L)=" << FormatSig6(eq.attacker.a_l) << "\n";
    if (eq.attacker_interval.has_value()) {
      std::cout << "attacker interval: P(A|H) in ["
                << FormatSig6(eq.attacker_interval->a_h_lo) << ", "
                << FormatSig6(eq.attacker_interval->a_h_hi) << "]\n";
    }
    std::cout << "beliefs: mu_H=" << FormatSig6(eq.belief.mu_h)
              << " mu_L=" << FormatSig6(eq.belief.mu_l) << "\n"
              << "pure equilibrium: "
              << (pure.profile.has_value() ? "exists" : pure.reason) << "\n"
              << "verification: max deviation gain "
              << FormatSig6(check.MaxGain()) << " (tol "
              << FormatSig6(check.tol) << ", "
              << (check.Ok() ? "ok" : "FAILED") << ")\n";
  }
  const auto dir = OutDir(args, config);
  if (dir.has_value()) {
    nlohmann::json j{{"params", ToJson(u)},
                     {"equilibrium", ToJson(eq)},
                     {"constants", ToJson(rc)},
                     {"verification", ToJson(check)}};
    Emit(*dir, "equilibrium.json", j.dump(2) + "\n");
  }
  return check.Ok() ? 0 : 1;
}

int CmdPlan(const CommonArgs& args, const std::string& route_flag,
            double margin) {
  const RunConfig config = LoadRunConfig(args.config_path);
  RequireValidParams(config.params);
  const UtilityParams& u = config.params;
  NetworkConfig net;
  net.gamma = RequireGamma(config);
  net.normal_nodes = RequireNormalNodes(config);
  net.delta = config.delta;
  const EvalRoute route =
      ParseRoute(route_flag.empty() ? config.route : route_flag);

  const DefensePlan plan = OptimalPlan(u, net, route);
  const DegeneracyReport degeneracy =
      CheckDegeneracy(u, net.gamma, plan.p_deployed, margin);

  std::vector<std::string> warnings;
  if (plan.tie) {
    warnings.push_back("two regimes tie at this gamma; picked regime " +
                       std::to_string(plan.j_star));
  }
  if (plan.routes_disagree) {
    warnings.push_back(
        "the two utility evaluation routes disagree on the best regime");
  }
  if (degeneracy.gamma_degenerate) {
    warnings.push_back("gamma sits at the critical value " +
                       FormatSig6(degeneracy.critical_gamma) +
                       " where attacker payoff lines coincide");
  }
  if (!degeneracy.p_safe) {
    warnings.push_back(
        "deployed ratio is within " + FormatSig6(margin) +
        " of a payoff-line intersection (nearest distance " +
        FormatSig6(degeneracy.nearest_distance) + ")");
  }

  if (JsonOut(args)) {
    nlohmann::json j{{"params", ToJson(u)},
                     {"gamma", net.gamma},
                     {"normal_nodes", net.normal_nodes},
                     {"delta", net.delta},
                     {"plan", ToJson(plan)},
                     {"degeneracy", ToJson(degeneracy)},
                     {"warnings", warnings}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "route: " << RouteName(plan.route) << "\n"
              << "limit utility by regime: 1=" << FormatSig6(plan.unet_by_regime[0])
              << " 2=" << FormatSig6(plan.unet_by_regime[1])
              << " 3=" << FormatSig6(plan.unet_by_regime[2]) << "\n"
              << "target regime: " << plan.j_star << "\n"
              << "boundary ratio p*: " << FormatSig6(plan.p_star) << "\n"
              << "deployed ratio: " << FormatSig6(plan.p_deployed) << "\n"
              << "honeypots: " << plan.m_star << " (exact "
              << FormatSig6(plan.m_star_real) << ") against "
              << net.normal_nodes << " normal nodes\n"
              << "realized ratio: " << FormatSig6(plan.realized_prior) << "\n"
              << "defender strategy: P(H|honeypot)="
              << FormatSig6(plan.sigma_d_star.d1) << "\n"
              << "predicted network-average utility: "
              << FormatSig6(plan.predicted_utility) << "\n";
    for (const std::string& w : warnings) {
      std::cout << "warning: " << w << "\n";
    }
  }
  const auto dir = OutDir(args, config);
  if (dir.has_value()) {
    nlohmann::json j{{"params", ToJson(u)},
                     {"plan", ToJson(plan)},
                     {"degeneracy", ToJson(degeneracy)},
                     {"warnings", warnings}};
    Emit(*dir, "plan.json", j.dump(2) + "\n");
  }
  return 0;
}

int CmdNormalForm(const CommonArgs& args, double margin) {
  const RunConfig config = LoadRunConfig(args.config_path);
  RequireValidParams(config.params);
  const UtilityParams& u = config.params;
  const double gamma = RequireGamma(config);
  const double p = EffectivePrior(config);

  const NormalFormGame game = InduceNormalForm(u, p, gamma);
  const std::vector<NfEquilibrium> equilibria = EnumerateEquilibria(game);
  const DegeneracyReport degeneracy = CheckDegeneracy(u, gamma, p, margin);
  const GammaPbne reference = SolveMixedPbne(u, p, gamma);
  const auto lines = AttackerLines(u, gamma, reference.sigma_d.d1);

  if (JsonOut(args)) {
    nlohmann::json eqs = nlohmann::json::array();
    for (const NfEquilibrium& eq : equilibria) {
      eqs.push_back(ToJson(eq));
    }
    nlohmann::json j{{"game", ToJson(game)},
                     {"equilibria", eqs},
                     {"degeneracy", ToJson(degeneracy)},
                     {"signaling_reference", ToJson(reference)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "p: " << FormatSig6(p) << "  gamma: " << FormatSig6(gamma)
              << "\n"
              << "payoffs (attacker, defender) by row and column:\n";
    for (std::size_t r = 0; r < kAttackerPures.size(); ++r) {
      std::cout << "  " << ToString(kAttackerPures[r]);
      for (int col = 0; col < 2; ++col) {
        std::cout << "  " << (col == 0 ? "H" : "L") << ": ("
                  << FormatSig6(game.attacker[r][col]) << ", "
                  << FormatSig6(game.defender[r][col]) << ")";
      }
      std::cout << "\n";
    }
    std::cout << "equilibria: " << equilibria.size() << "\n";
    for (const NfEquilibrium& eq : equilibria) {
      std::cout << "  defender H-weight " << FormatSig6(eq.defender_mix[0])
                << ", attacker (AA,AN,NA,NN)=(" << FormatSig6(eq.attacker_mix[0])
                << ", " << FormatSig6(eq.attacker_mix[1]) << ", "
                << FormatSig6(eq.attacker_mix[2]) << ", "
                << FormatSig6(eq.attacker_mix[3]) << ")"
                << (eq.component ? " [component]" : "") << "\n"
                << "    behavioral: P(A|H)=" << FormatSig6(eq.AttackAfterHigh())
                << " P(A|L)=" << FormatSig6(eq.AttackAfterLow())
                << "  values: defender " << FormatSig6(eq.defender_value)
                << ", attacker " << FormatSig6(eq.attacker_value) << "\n";
    }
    std::cout << "critical gamma: " << FormatSig6(degeneracy.critical_gamma)
              << (degeneracy.gamma_degenerate ? " (degenerate here)" : "")
              << "\n"
              << "payoff-line intersections in p:";
    if (degeneracy.p_intersections.empty()) {
      std::cout << " none";
    }
    for (double px : degeneracy.p_intersections) {
      std::cout << " " << FormatSig6(px);
    }
    std::cout << "\n"
              << "p distance to nearest intersection: "
              << FormatSig6(degeneracy.nearest_distance) << " ("
              << (degeneracy.p_safe ? "safe" : "too close") << " at margin "
              << FormatSig6(margin) << ")\n";
  }
  const auto dir = OutDir(args, config);
  if (dir.has_value()) {
    Emit(*dir, "attacker_payoff.csv", NormalFormPayoffCsv(game, true));
    Emit(*dir, "defender_payoff.csv", NormalFormPayoffCsv(game, false));
    Emit(*dir, "lines.csv", AttackerLinesCsv(lines));
  }
  return 0;
}

int CmdSimulate(const CommonArgs& args, std::optional<std::uint64_t> seed,
                std::optional<long long> rounds) {
  const RunConfig config = LoadRunConfig(args.config_path);
  RequireValidParams(config.params);
  const UtilityParams& u = config.params;
  FpConfig fp = MakeFpConfig(config);
  if (seed.has_value()) {
    fp.seed = *seed;
  }
  if (rounds.has_value()) {
    fp.rounds = *rounds;
  }

  const GammaPbne reference = SolveMixedPbne(u, fp.p, fp.gamma);
  const FpRunResult run = RunFictitiousPlay(u, fp);
  const ConvergenceReport conv = ConvergenceMetrics(u, run, reference);
  const double reference_unet =
      NetworkAvgUtility(u, fp.p, reference.sigma_d, reference.attacker);

  nlohmann::json summary_json{
      {"summary", ToJson(run.summary)},
      {"reference", ToJson(reference)},
      {"reference_unet", reference_unet},
      {"convergence",
       {{"final_distance", conv.final_distance},
        {"first_below_010", conv.first_below_010},
        {"first_below_005", conv.first_below_005},
        {"first_below_002", conv.first_below_002}}}};

  if (JsonOut(args)) {
    std::cout << summary_json.dump(2) << "\n";
  } else {
    const FpSummary& s = run.summary;
    std::cout << "rounds: " << s.rounds << " (honeypot " << s.theta1_rounds
              << ", normal " << s.theta2_rounds << ")  seed: " << fp.seed
              << "\n"
              << "final estimates: P(H|honeypot)="
              << FormatSig6(s.final_sigma_hat_d_h)
              << " P(A|H)=" << FormatSig6(s.final_sigma_hat_a_h)
              << " P(A|L)=" << FormatSig6(s.final_sigma_hat_a_l) << "\n"
              << "final beliefs: mu_H=" << FormatSig6(s.final_mu_h)
              << " mu_L=" << FormatSig6(s.final_mu_l) << "\n"
              << "reference (regime " << RegimeName(reference.regime)
              << "): P(H|honeypot)=" << FormatSig6(reference.sigma_d.d1)
              << " P(A|H)=" << FormatSig6(reference.attacker.a_h)
              << " P(A|L)=" << FormatSig6(reference.attacker.a_l) << "\n"
              << "distance to reference: " << FormatSig6(conv.final_distance)
              << " (first below 0.1/0.05/0.02 at round "
              << conv.first_below_010 << "/" << conv.first_below_005 << "/"
              << conv.first_below_002 << ")\n"
              << "running network-average utility: "
              << FormatSig6(s.final_running_unet) << " (reference "
              << FormatSig6(reference_unet) << ")"
              << (s.utility_conclusive ? "" : " [inconclusive]") << "\n";
  }
  const auto dir = OutDir(args, config);
  if (dir.has_value()) {
    Emit(*dir, "trajectory.csv", TrajectoryCsv(run, conv));
    Emit(*dir, "summary.json", summary_json.dump(2) + "\n");
  }
  return 0;
}

int CmdSweep(const CommonArgs& args, const std::string& route_flag,
             double start, double stop, double step) {
  const RunConfig config = LoadRunConfig(args.config_path);
  RequireValidParams(config.params);
  const UtilityParams& u = config.params;
  const EvalRoute route =
      ParseRoute(route_flag.empty() ? config.route : route_flag);

  const std::vector<double> grid = MakeGrid(start, stop, step);
  const SweepResult sweep = GammaSweep(u, grid, route);

  if (JsonOut(args)) {
    std::cout << ToJson(sweep).dump(2) << "\n";
  } else {
    std::cout << "route: " << RouteName(sweep.route) << "\n"
              << "gamma grid: [" << FormatSig6(start) << ", "
              << FormatSig6(stop) << "] step " << FormatSig6(step) << " ("
              << sweep.rows.size() << " points)\n";
    if (sweep.crossovers.empty()) {
      std::cout << "best regime is constant across the grid\n";
    }
    for (const Crossover& c : sweep.crossovers) {
      std::cout << "best regime switches " << c.from_regime << " -> "
                << c.to_regime << " at gamma " << FormatSig6(c.gamma)
                << " (utility " << FormatSig6(c.value) << ")\n";
    }
  }
  const auto dir = OutDir(args, config);
  if (dir.has_value()) {
    Emit(*dir, "sweep.csv", SweepCsv(sweep));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signaling-game honeypot planner"};
  app.require_subcommand(1);

  CommonArgs validate_args;
  CLI::App* validate = app.add_subcommand(
      "validate", "check the utility parameters against the model assumptions");
  AddCommon(validate, &validate_args);

  CommonArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "solve the signaling game at a fixed honeypot ratio");
  AddCommon(solve, &solve_args);

  CommonArgs plan_args;
  std::string plan_route;
  double plan_margin = 1e-3;
  CLI::App* plan = app.add_subcommand(
      "plan", "choose the honeypot count that maximizes network utility");
  AddCommon(plan, &plan_args);
  plan->add_option("--route", plan_route,
                   "utility evaluation route (compositional|printed)");
  plan->add_option("--margin", plan_margin,
                   "minimum distance to a payoff-line intersection");

  CommonArgs nf_args;
  double nf_margin = 1e-3;
  CLI::App* normal_form = app.add_subcommand(
      "normal-form", "reduce to the two-by-four normal form and enumerate "
                     "equilibria");
  AddCommon(normal_form, &nf_args);
  normal_form->add_option("--margin", nf_margin,
                          "minimum distance to a payoff-line intersection");

  CommonArgs sim_args;
  std::optional<std::uint64_t> sim_seed;
  std::optional<long long> sim_rounds;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "run fictitious play and compare against the equilibrium");
  AddCommon(simulate, &sim_args);
  simulate->add_option_function<std::uint64_t>(
      "--seed", [&sim_seed](std::uint64_t s) { sim_seed = s; },
      "override fp.seed from the config");
  simulate->add_option_function<long long>(
      "--rounds", [&sim_rounds](long long r) { sim_rounds = r; },
      "override fp.rounds from the config");

  CommonArgs sweep_args;
  std::string sweep_route;
  double sweep_start = 0.01;
  double sweep_stop = 0.99;
  double sweep_step = 0.0005;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "tabulate the planner's utility per regime over a gamma grid");
  AddCommon(sweep, &sweep_args);
  sweep->add_option("--route", sweep_route,
                    "utility evaluation route (compositional|printed)");
  sweep->add_option("--gamma-start", sweep_start, "first gamma value");
  sweep->add_option("--gamma-stop", sweep_stop, "last gamma value");
  sweep->add_option("--gamma-step", sweep_step, "gamma increment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      return CmdValidate(validate_args);
    }
    if (solve->parsed()) {
      return CmdSolve(solve_args);
    }
    if (plan->parsed()) {
      return CmdPlan(plan_args, plan_route, plan_margin);
    }
    if (normal_form->parsed()) {
      return CmdNormalForm(nf_args, nf_margin);
    }
    if (simulate->parsed()) {
      return CmdSimulate(sim_args, sim_seed, sim_rounds);
    }
    if (sweep->parsed()) {
      return CmdSweep(sweep_args, sweep_route, sweep_start, sweep_stop,
                      sweep_step);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
