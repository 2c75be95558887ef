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
#include <string>
#include <utility>
#include <vector>

namespace symspace {

enum class Mode { automatic, exhaustive, sampled };

// Common knobs for verification routines that can either sweep every
// target or check a seeded sample.
struct VerifyOptions {
  Mode mode = Mode::automatic;
  std::size_t samples = 1000;
  std::uint64_t seed = 0x5eed5eedULL;
  // Test-only negative control: corrupt one entry of the function under
  // test so that verification must report a counterexample.
  bool inject_fault = false;
};

struct Counterexample {
  std::string where;
  std::string expected;
  std::string got;
};

// Result of a verification routine: pass/fail, how much was checked, up
// to kMaxCounterexamples failures, and named facts (constants read off,
// counts) in insertion order.
struct Outcome {
  static constexpr std::size_t kMaxCounterexamples = 20;

  bool passed = true;
  bool sampled = false;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::pair<std::string, std::string>> facts;

  void fail(std::string where, std::string expected, std::string got) {
    passed = false;
    ++failures;
    if (counterexamples.size() < kMaxCounterexamples)
      counterexamples.push_back({std::move(where), std::move(expected), std::move(got)});
  }
  void expect(bool ok, std::string where, std::string expected, std::string got) {
    ++checked;
    if (!ok) fail(std::move(where), std::move(expected), std::move(got));
  }
  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  void merge(const Outcome& other) {
    passed = passed && other.passed;
    sampled = sampled || other.sampled;
    checked += other.checked;
    failures += other.failures;
    for (const auto& c : other.counterexamples)
      if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(c);
  }
};

}  // namespace symspace
