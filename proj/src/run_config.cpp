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

#include "hpsig/run_config.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace hpsig {
namespace {

std::string Trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void Fail(int line, const std::string& message) {
  std::ostringstream os;
  os << "config line " << line << ": " << message;
  throw UsageError(os.str());
}

double ParseDouble(const std::string& value, int line, const std::string& key) {
  std::size_t pos = 0;
  double out = 0;
  try {
    out = std::stod(value, &pos);
  } catch (const std::exception&) {
    Fail(line, "expected a number for '" + key + "', got '" + value + "'");
  }
  if (pos != value.size()) {
    Fail(line, "trailing characters after number for '" + key + "'");
  }
  return out;
}

long long ParseInt(const std::string& value, int line, const std::string& key) {
  std::size_t pos = 0;
  long long out = 0;
  try {
    out = std::stoll(value, &pos);
  } catch (const std::exception&) {
    Fail(line, "expected an integer for '" + key + "', got '" + value + "'");
  }
  if (pos != value.size()) {
    Fail(line, "trailing characters after integer for '" + key + "'");
  }
  return out;
}

std::uint64_t ParseU64(const std::string& value, int line,
                       const std::string& key) {
  std::size_t pos = 0;
  unsigned long long out = 0;
  try {
    out = std::stoull(value, &pos);
  } catch (const std::exception&) {
    Fail(line, "expected an unsigned integer for '" + key + "', got '" +
                   value + "'");
  }
  if (pos != value.size()) {
    Fail(line, "trailing characters after integer for '" + key + "'");
  }
  return out;
}

bool ParseBool(const std::string& value, int line, const std::string& key) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  Fail(line, "expected true/false for '" + key + "', got '" + value + "'");
}

void RequireParamsSeen(const std::set<std::string>& seen) {
  static const char* kRequired[] = {"alpha", "beta", "c_d", "c_a",
                                    "f",     "g",    "h"};
  std::vector<std::string> missing;
  for (const char* name : kRequired) {
    if (seen.find(name) == seen.end()) {
      missing.push_back(name);
    }
  }
  if (!missing.empty()) {
    std::ostringstream os;
    os << "config is missing required parameter(s):";
    for (const std::string& name : missing) {
      os << ' ' << name;
    }
    throw UsageError(os.str());
  }
}

}  // namespace

RunConfig ParseRunConfigText(const std::string& text) {
  RunConfig c;
  std::set<std::string> params_seen;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) {
      raw.erase(hash);
    }
    const std::string line = Trim(raw);
    if (line.empty()) {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      Fail(line_no, "expected key = value");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (key.empty()) {
      Fail(line_no, "empty key");
    }
    if (value.empty()) {
      Fail(line_no, "empty value for '" + key + "'");
    }

    if (key == "alpha") {
      c.params.alpha = ParseDouble(value, line_no, key);
    } else if (key == "beta") {
      c.params.beta = ParseDouble(value, line_no, key);
    } else if (key == "c_d") {
      c.params.c_d = ParseDouble(value, line_no, key);
    } else if (key == "c_a") {
      c.params.c_a = ParseDouble(value, line_no, key);
    } else if (key == "f") {
      c.params.f = ParseDouble(value, line_no, key);
    } else if (key == "g") {
      c.params.g = ParseDouble(value, line_no, key);
    } else if (key == "h") {
      c.params.h = ParseDouble(value, line_no, key);
    } else if (key == "gamma") {
      c.gamma = ParseDouble(value, line_no, key);
    } else if (key == "p") {
      c.p = ParseDouble(value, line_no, key);
    } else if (key == "honeypots") {
      c.honeypots = static_cast<int>(ParseInt(value, line_no, key));
    } else if (key == "normal_nodes") {
      c.normal_nodes = static_cast<int>(ParseInt(value, line_no, key));
    } else if (key == "delta") {
      c.delta = ParseDouble(value, line_no, key);
    } else if (key == "route") {
      c.route = value;
    } else if (key == "out_dir") {
      c.out_dir = value;
    } else if (key == "fp.rounds") {
      c.fp.rounds = ParseInt(value, line_no, key);
    } else if (key == "fp.seed") {
      c.fp.seed = ParseU64(value, line_no, key);
    } else if (key == "fp.init_estimate") {
      c.fp.init_estimate = ParseDouble(value, line_no, key);
    } else if (key == "fp.pseudo_count") {
      c.fp.pseudo_count = ParseDouble(value, line_no, key);
    } else if (key == "fp.randomize_init") {
      c.fp.randomize_init = ParseBool(value, line_no, key);
    } else if (key == "fp.clamp_estimate") {
      c.fp.clamp_estimate = ParseBool(value, line_no, key);
    } else if (key == "fp.tie_break") {
      c.fp.tie_break = value;
    } else if (key == "fp.thinning") {
      c.fp.thinning = ParseInt(value, line_no, key);
    } else {
      Fail(line_no, "unknown key '" + key + "'");
    }
    if (key == "alpha" || key == "beta" || key == "c_d" || key == "c_a" ||
        key == "f" || key == "g" || key == "h") {
      params_seen.insert(key);
    }
  }
  RequireParamsSeen(params_seen);
  return c;
}

RunConfig ParseRunConfigJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw UsageError("config JSON must be an object");
  }
  RunConfig c;
  std::set<std::string> params_seen;
  try {
    if (!j.contains("params") || !j["params"].is_object()) {
      throw UsageError("config JSON needs a 'params' object");
    }
    for (const auto& [key, value] : j["params"].items()) {
      if (key == "alpha") {
        c.params.alpha = value.get<double>();
      } else if (key == "beta") {
        c.params.beta = value.get<double>();
      } else if (key == "c_d") {
        c.params.c_d = value.get<double>();
      } else if (key == "c_a") {
        c.params.c_a = value.get<double>();
      } else if (key == "f") {
        c.params.f = value.get<double>();
      } else if (key == "g") {
        c.params.g = value.get<double>();
      } else if (key == "h") {
        c.params.h = value.get<double>();
      } else {
        throw UsageError("unknown key 'params." + key + "' in config JSON");
      }
      params_seen.insert(key);
    }
    for (const auto& [key, value] : j.items()) {
      if (key == "params") {
        continue;
      } else if (key == "gamma") {
        c.gamma = value.get<double>();
      } else if (key == "p") {
        c.p = value.get<double>();
      } else if (key == "honeypots") {
        c.honeypots = value.get<int>();
      } else if (key == "normal_nodes") {
        c.normal_nodes = value.get<int>();
      } else if (key == "delta") {
        c.delta = value.get<double>();
      } else if (key == "route") {
        c.route = value.get<std::string>();
      } else if (key == "out_dir") {
        c.out_dir = value.get<std::string>();
      } else if (key == "fp") {
        if (!value.is_object()) {
          throw UsageError("config JSON 'fp' must be an object");
        }
        for (const auto& [fkey, fvalue] : value.items()) {
          if (fkey == "rounds") {
            c.fp.rounds = fvalue.get<long long>();
          } else if (fkey == "seed") {
            c.fp.seed = fvalue.get<std::uint64_t>();
          } else if (fkey == "init_estimate") {
            c.fp.init_estimate = fvalue.get<double>();
          } else if (fkey == "pseudo_count") {
            c.fp.pseudo_count = fvalue.get<double>();
          } else if (fkey == "randomize_init") {
            c.fp.randomize_init = fvalue.get<bool>();
          } else if (fkey == "clamp_estimate") {
            c.fp.clamp_estimate = fvalue.get<bool>();
          } else if (fkey == "tie_break") {
            c.fp.tie_break = fvalue.get<std::string>();
          } else if (fkey == "thinning") {
            c.fp.thinning = fvalue.get<long long>();
          } else {
            throw UsageError("unknown key 'fp." + fkey + "' in config JSON");
          }
        }
      } else {
        throw UsageError("unknown key '" + key + "' in config JSON");
      }
    }
  } catch (const nlohmann::json::type_error& e) {
    throw UsageError(std::string("config JSON has a wrongly typed field: ") +
                     e.what());
  }
  RequireParamsSeen(params_seen);
  return c;
}

RunConfig LoadRunConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("cannot read config file: " + path);
  }
  const std::string text = buffer.str();

  bool looks_json = path.size() >= 5 &&
                    path.compare(path.size() - 5, 5, ".json") == 0;
  if (!looks_json) {
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        continue;
      }
      looks_json = ch == '{';
      break;
    }
  }
  return looks_json ? ParseRunConfigJson(text) : ParseRunConfigText(text);
}

double EffectivePrior(const RunConfig& c) {
  if (c.p.has_value() && c.honeypots.has_value()) {
    throw UsageError("give either p or honeypots, not both");
  }
  if (c.p.has_value()) {
    return *c.p;
  }
  if (!c.honeypots.has_value()) {
    throw UsageError("the prior is undetermined: set p, or honeypots plus "
                     "normal_nodes");
  }
  if (*c.honeypots < 1) {
    throw UsageError("honeypots must be at least 1");
  }
  const int n = RequireNormalNodes(c);
  return static_cast<double>(*c.honeypots) /
         static_cast<double>(*c.honeypots + n);
}

double RequireGamma(const RunConfig& c) {
  if (!c.gamma.has_value()) {
    throw UsageError("the config does not set gamma");
  }
  return *c.gamma;
}

int RequireNormalNodes(const RunConfig& c) {
  if (!c.normal_nodes.has_value()) {
    throw UsageError("the config does not set normal_nodes");
  }
  if (*c.normal_nodes < 1) {
    throw UsageError("normal_nodes must be at least 1");
  }
  return *c.normal_nodes;
}

FpConfig MakeFpConfig(const RunConfig& c) {
  FpConfig f;
  f.p = EffectivePrior(c);
  f.gamma = RequireGamma(c);
  f.rounds = c.fp.rounds;
  f.seed = c.fp.seed;
  f.init_estimate = c.fp.init_estimate;
  f.pseudo_count = c.fp.pseudo_count;
  f.randomize_init = c.fp.randomize_init;
  f.clamp_estimate = c.fp.clamp_estimate;
  if (c.fp.tie_break == "uniform-random") {
    f.tie_break = TieBreak::kUniformRandom;
  } else if (c.fp.tie_break == "prefer-first") {
    f.tie_break = TieBreak::kPreferFirst;
  } else {
    throw UsageError("fp.tie_break must be uniform-random or prefer-first, "
                     "got '" + c.fp.tie_break + "'");
  }
  f.thinning = c.fp.thinning;
  return f;
}

}  // namespace hpsig
