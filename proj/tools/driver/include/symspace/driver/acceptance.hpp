// Copyright 2026 The symspace Authors
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

#pragma once

#include <cstdint>
#include <string>

#include "symspace/driver/report.hpp"

namespace symspace::driver {

inline constexpr int kCriterionCount = 12;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  bool inject_fault = false;
  bool timing = true;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool within_time = true;
  std::string summary;
  Json details = Json::object();
  double elapsed_ms = 0;
  double limit_ms = 0;
};

std::string criterion_title(int id);
CriterionResult run_criterion(int id, const SuiteOptions& opts);
Json criterion_json(const CriterionResult& r, bool timing);

// All criteria in order, aggregated into one report.
Report verify_all(const SuiteOptions& opts);

}  // namespace symspace::driver
