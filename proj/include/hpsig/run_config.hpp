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

#ifndef HPSIG_RUN_CONFIG_HPP_
#define HPSIG_RUN_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "hpsig/fictitious_play.hpp"
#include "hpsig/params.hpp"

namespace hpsig {

// A run configuration file. Two formats are accepted: flat key=value text
// with dotted keys for nesting (fp.seed = 7) or a JSON object with the same
// nested shape. The seven utility parameters are required; everything else is
// optional with defaults.
struct RunConfig {
  UtilityParams params;
  std::optional<double> gamma;
  std::optional<double> p;
  std::optional<int> honeypots;     // M; alternative to p, needs N
  std::optional<int> normal_nodes;  // N
  double delta = 0.01;
  std::string route = "compositional";
  std::optional<std::string> out_dir;
  struct Fp {
    long long rounds = 100000;
    std::uint64_t seed = 0;
    double init_estimate = 0.5;
    double pseudo_count = 1.0;
    bool randomize_init = false;
    bool clamp_estimate = true;
    std::string tie_break = "uniform-random";  // or "prefer-first"
    long long thinning = 1;
  } fp;
};

// Reads and parses `path`; the format is chosen by extension (.json) or by a
// leading '{'. Throws IoError if unreadable, UsageError with a line/field
// diagnostic on malformed content.
RunConfig LoadRunConfig(const std::string& path);

RunConfig ParseRunConfigText(const std::string& text);  // key=value lines
RunConfig ParseRunConfigJson(const std::string& text);

// The prior to use: p if given, else M/(M+N). Exactly one of p and M must be
// present (UsageError otherwise).
double EffectivePrior(const RunConfig& c);

// gamma with presence check (UsageError when missing).
double RequireGamma(const RunConfig& c);
int RequireNormalNodes(const RunConfig& c);

// Fills an FpConfig from the file settings plus the effective prior.
FpConfig MakeFpConfig(const RunConfig& c);

}  // namespace hpsig

#endif  // HPSIG_RUN_CONFIG_HPP_
