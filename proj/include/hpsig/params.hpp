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

#ifndef HPSIG_PARAMS_HPP_
#define HPSIG_PARAMS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace hpsig {

// Raised when utility parameters violate the model's admissibility constraints.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed CLI/config input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an output path cannot be created or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Utility parameters of the signaling game. alpha is the attacker's base gain
// from compromising a normal node, beta the per-node operating cost, c_d the
// defender's cost of sustaining a high-interaction signal, c_a the attacker's
// cost of mounting an attack, f the capture multiplier on honeypots, g the
// damage multiplier on normal nodes, and h the extra damage multiplier when a
// normal node advertises high interaction.
struct UtilityParams {
  double alpha = 0;
  double beta = 0;
  double c_d = 0;
  double c_a = 0;
  double f = 0;
  double g = 0;
  double h = 0;
};

struct ConstraintViolation {
  std::string name;    // e.g. "f*alpha-alpha-c_d>0"
  std::string detail;  // evaluated numbers
};

struct ParamReport {
  std::vector<ConstraintViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks positivity of all parameters, f > 1, h > 1, alpha > beta,
// f*alpha - alpha - c_d > 0 and g*alpha - c_a > 0. Non-finite values are
// reported as violations rather than propagated.
ParamReport ValidateParams(const UtilityParams& u);

// Throws ValidationError listing every violated constraint by name.
void RequireValidParams(const UtilityParams& u);

}  // namespace hpsig

#endif  // HPSIG_PARAMS_HPP_
