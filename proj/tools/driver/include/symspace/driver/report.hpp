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
#include <filesystem>
#include <string>

#include "json.hpp"
#include "symspace/outcome.hpp"

namespace symspace::driver {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

enum class Status { pass, fail, finding };
std::string status_name(Status s);

struct Report {
  std::string experiment;
  std::string section;
  Json params = Json::object();
  std::uint64_t seed = kDefaultSeed;
  Status status = Status::pass;
  Json details = Json::object();
  double elapsed_ms = 0;

  // elapsed_ms is written as 0 when timing is off, so that equal inputs
  // serialize to equal bytes.
  Json to_json(bool timing = true) const;
};

Json outcome_json(const Outcome& o);

// Human-readable summary printed next to the JSON report.
std::string render_text(const Report& r);

// Writes through a temporary file in the same directory and renames it
// into place.
void write_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace symspace::driver
