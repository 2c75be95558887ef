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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "symspace/driver/acceptance.hpp"
#include "symspace/driver/report.hpp"
#include "symspace/driver/run.hpp"
#include "symspace/errors.hpp"

using namespace symspace;
using namespace symspace::driver;
namespace fs = std::filesystem;

namespace {

RunConfig config(std::string command) {
  RunConfig c;
  c.command = std::move(command);
  c.timing = false;
  return c;
}

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("report schema and key order") {
  Report r;
  r.experiment = "fourier-quad";
  r.section = "quadratic-space transform";
  r.params = {{"q", 3}};
  r.details = {{"x", 1}};
  r.elapsed_ms = 12.5;
  const Json j = r.to_json(true);
  CHECK(keys(j) == std::vector<std::string>{"schema_version", "experiment", "section", "params", "seed", "status",
                                            "details", "elapsed_ms"});
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["status"] == "pass");
  CHECK(j["elapsed_ms"] == 12);
  CHECK(r.to_json(false)["elapsed_ms"] == 0);
  CHECK(status_name(Status::finding) == "finding");
}

TEST_CASE("outcome serialization") {
  Outcome o;
  o.expect(false, "x#1", "1", "2");
  o.fact("k", "a");
  o.fact("k", "b");
  const Json j = outcome_json(o);
  CHECK(j["passed"] == false);
  CHECK(j["failures"] == 1);
  CHECK(j["facts"]["k"] == Json::array({"a", "b"}));
  CHECK(j["counterexamples"][0]["where"] == "x#1");
}

TEST_CASE("atomic write replaces the target and leaves no temporary") {
  const fs::path dir = fs::temp_directory_path() / "symspace_driver_test";
  fs::create_directories(dir);
  const fs::path target = dir / "out.json";
  write_atomic(target, "first");
  write_atomic(target, "second");
  std::ifstream in(target);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "second");
  CHECK_FALSE(fs::exists(dir / "out.json.tmp"));
  CHECK_THROWS(write_atomic(dir / "missing" / "x.json", "y"));
  fs::remove_all(dir);
}

TEST_CASE("field parsing") {
  CHECK(field_for(9)->k() == 2);
  CHECK(field_for(7)->p() == 7);
  CHECK_THROWS_AS(field_for(6), ConfigError);
  CHECK_THROWS_AS(field_for(1), ConfigError);
  CHECK_THROWS_AS(field_for(1 << 17), ConfigError);
}

TEST_CASE("experiments report pass, fail and configuration errors") {
  auto c = config("fourier-quad");
  c.M = 3;
  c.q = 5;
  CHECK(run(c).status == Status::pass);
  c.inject_fault = true;
  CHECK(run(c).status == Status::fail);

  auto bad = config("fourier-quad");
  bad.q = 6;
  CHECK_THROWS_AS(run(bad), ConfigError);
  auto unknown = config("nope");
  CHECK_THROWS_AS(run(unknown), ConfigError);

  auto char2 = config("fourier-quad");
  char2.q = 2;
  const Report r = run(char2);
  CHECK(r.status == Status::fail);
  CHECK(r.details.contains("error"));
}

TEST_CASE("psi and orbit experiments") {
  auto p = config("psi");
  p.orbit = 10;
  p.seed = 1;
  const Report r = run(p);
  CHECK(r.status == Status::pass);
  CHECK(r.details["class"] == "gamma1");

  auto o = config("orbits");
  const Report orb = run(o);
  CHECK(orb.details["count"] == 10);

  auto s = config("psi");
  s.psi_case = "so";
  s.M = 4;
  s.x_zero = false;
  CHECK(run(s).details["class"] == "odd");
}

TEST_CASE("reports are deterministic for a fixed seed") {
  auto c = config("curve");
  c.q = 7;
  c.seed = 3;
  CHECK(run(c).to_json(false).dump() == run(c).to_json(false).dump());
  SuiteOptions opts;
  opts.timing = false;
  const auto a = run_criterion(5, opts), b = run_criterion(5, opts);
  CHECK(criterion_json(a, false).dump() == criterion_json(b, false).dump());
  CHECK(a.passed);
}

TEST_CASE("criterion titles") {
  for (int id = 1; id <= kCriterionCount; ++id) CHECK_FALSE(criterion_title(id).empty());
  CHECK_THROWS(run_criterion(0, SuiteOptions{}));
}
