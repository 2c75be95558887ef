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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "symspace/driver/report.hpp"
#include "symspace/gf.hpp"
#include "symspace/outcome.hpp"

namespace symspace::driver {

struct RunConfig {
  std::string command;
  int q = 3;
  int n = 2;
  int n1 = 2, n2 = 2;
  int M = 2;
  int delta = 1;
  std::string family = "glsp";  // counts: glsp | so
  std::string psi_case = "gl22";  // psi: gl22 | glsp | so
  int orbit = 10;
  std::vector<int> partition{1};
  bool x_zero = true;
  std::uint64_t seed = kDefaultSeed;
  int precision = 8;
  Mode mode = Mode::automatic;
  std::size_t samples = 1000;
  std::string output;
  bool json = false;
  bool timing = true;
  bool inject_fault = false;
};

// F_q for a prime power q; ConfigError otherwise.
std::unique_ptr<gf::FieldCtx> field_for(int q);

// Runs one experiment. Configuration problems raise ConfigError; failures of
// the computation itself (unsupported characteristic, exhausted budgets,
// degenerate sampling) come back as a failing report.
Report run(const RunConfig& config);

}  // namespace symspace::driver
