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

#ifndef HPSIG_REPORT_HPP_
#define HPSIG_REPORT_HPP_

#include <string>

#include <json.hpp>

#include "hpsig/defense.hpp"
#include "hpsig/equilibrium.hpp"
#include "hpsig/fictitious_play.hpp"
#include "hpsig/normal_form.hpp"
#include "hpsig/params.hpp"

namespace hpsig {

// Text reports round to six significant digits; JSON keeps full precision.
std::string FormatSig6(double x);

// CSV cells use enough digits to round-trip doubles and are byte-stable
// across runs of the same build.
std::string FormatCsv(double x);

nlohmann::json ToJson(const UtilityParams& u);
nlohmann::json ToJson(const GammaPbne& eq);
nlohmann::json ToJson(const DeviationReport& report);
nlohmann::json ToJson(const RegimeConstants& rc);
nlohmann::json ToJson(const MixingBounds& mb);
nlohmann::json ToJson(const DefensePlan& plan);
nlohmann::json ToJson(const SweepResult& sweep);
nlohmann::json ToJson(const DegeneracyReport& report);
nlohmann::json ToJson(const NormalFormGame& g);
nlohmann::json ToJson(const NfEquilibrium& eq);
nlohmann::json ToJson(const FpSummary& summary);

std::string SweepCsv(const SweepResult& sweep);
std::string NormalFormPayoffCsv(const NormalFormGame& g, bool attacker);
std::string AttackerLinesCsv(const std::array<PayoffLine, 4>& lines);
std::string TrajectoryCsv(const FpRunResult& run, const ConvergenceReport& conv);

// Writes text to path, creating parent directories. Throws IoError on
// failure.
void WriteFile(const std::string& path, const std::string& content);

}  // namespace hpsig

#endif  // HPSIG_REPORT_HPP_
