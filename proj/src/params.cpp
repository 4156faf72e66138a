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

#include "hpsig/params.hpp"

#include <cmath>
#include <sstream>

namespace hpsig {
namespace {

std::string Num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

ParamReport ValidateParams(const UtilityParams& u) {
  ParamReport report;
  auto fail = [&report](std::string name, std::string detail) {
    report.violations.push_back({std::move(name), std::move(detail)});
  };

  const struct {
    const char* name;
    double value;
  } fields[] = {{"alpha", u.alpha}, {"beta", u.beta}, {"c_d", u.c_d},
                {"c_a", u.c_a},     {"f", u.f},       {"g", u.g},
                {"h", u.h}};
  bool finite = true;
  for (const auto& field : fields) {
    if (!std::isfinite(field.value)) {
      fail(std::string(field.name) + " finite", field.name);
      finite = false;
    }
  }
  if (!finite) return report;

  for (const auto& field : fields) {
    if (field.value <= 0) {
      fail(std::string(field.name) + ">0",
           std::string(field.name) + " = " + Num(field.value));
    }
  }
  if (u.f <= 1) fail("f>1", "f = " + Num(u.f));
  if (u.h <= 1) fail("h>1", "h = " + Num(u.h));
  if (u.alpha - u.beta <= 0) {
    fail("-beta+alpha>0", "alpha - beta = " + Num(u.alpha - u.beta));
  }
  if (u.f * u.alpha - u.alpha - u.c_d <= 0) {
    fail("f*alpha-alpha-c_d>0",
         "f*alpha - alpha - c_d = " + Num(u.f * u.alpha - u.alpha - u.c_d));
  }
  if (u.g * u.alpha - u.c_a <= 0) {
    fail("g*alpha-c_a>0", "g*alpha - c_a = " + Num(u.g * u.alpha - u.c_a));
  }
  return report;
}

void RequireValidParams(const UtilityParams& u) {
  const ParamReport report = ValidateParams(u);
  if (report.ok()) return;
  std::string message = "invalid utility parameters:";
  for (const auto& v : report.violations) {
    message += " [" + v.name + "]";
  }
  throw ValidationError(message);
}

}  // namespace hpsig
