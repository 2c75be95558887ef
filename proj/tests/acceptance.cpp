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

// Acceptance runner: one line per criterion, exit status 0 iff every
// selected criterion passed within its time limit.

#include <cstdio>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "symspace/driver/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace symspace::driver;
  CLI::App app{"symspace acceptance suite"};
  std::vector<int> ids;
  SuiteOptions opts;
  bool verbose = false;
  app.add_option("-c,--criterion", ids, "Criterion ids to run (default: all)")
      ->check(CLI::Range(1, kCriterionCount));
  app.add_option("--seed", opts.seed, "Base seed");
  app.add_flag("-v,--verbose", verbose, "Print criterion details as JSON");
  CLI11_PARSE(app, argc, argv);
  if (ids.empty())
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);

  int failed = 0;
  for (int id : ids) {
    CriterionResult r;
    try {
      r = run_criterion(id, opts);
    } catch (const std::exception& e) {
      r.id = id;
      r.title = criterion_title(id);
      r.summary = std::string("error: ") + e.what();
    }
    if (!r.passed) ++failed;
    std::printf("[%s] %2d %s: %s (%.0f ms, limit %.0f ms)\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.summary.c_str(), r.elapsed_ms, r.limit_ms);
    if (verbose || !r.passed) std::cout << r.details.dump(2) << "\n";
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", ids.size() - static_cast<std::size_t>(failed), ids.size());
  return failed == 0 ? 0 : 1;
}
