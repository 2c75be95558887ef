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

#include "symspace/driver/report.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "symspace/errors.hpp"

namespace symspace::driver {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::finding:
      return "finding";
  }
  return "fail";
}

Json Report::to_json(bool timing) const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["experiment"] = experiment;
  j["section"] = section;
  j["params"] = params;
  j["seed"] = seed;
  j["status"] = status_name(status);
  j["details"] = details;
  j["elapsed_ms"] = timing ? static_cast<std::int64_t>(elapsed_ms) : 0;
  return j;
}

Json outcome_json(const Outcome& o) {
  Json j;
  j["passed"] = o.passed;
  j["sampled"] = o.sampled;
  j["checked"] = o.checked;
  j["failures"] = o.failures;
  Json facts = Json::object();
  for (const auto& [k, v] : o.facts) {
    if (facts.contains(k)) {
      if (!facts[k].is_array()) facts[k] = Json::array({facts[k]});
      facts[k].push_back(v);
    } else {
      facts[k] = v;
    }
  }
  j["facts"] = facts;
  Json ce = Json::array();
  for (const auto& c : o.counterexamples) ce.push_back({{"where", c.where}, {"expected", c.expected}, {"got", c.got}});
  j["counterexamples"] = ce;
  return j;
}

namespace {

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.experiment << " [" << r.section << "]  " << status_name(r.status) << "\n";
  for (const auto& [k, v] : r.params.items()) os << "  " << k << " = " << scalar(v) << "\n";
  os << "  seed = " << r.seed << "\n";
  for (const auto& [k, v] : r.details.items()) {
    if (v.is_object() && v.contains("passed")) {
      os << "  " << k << ": " << (v["passed"].get<bool>() ? "pass" : "FAIL") << " (" << v["checked"].dump()
         << " checks, " << v["failures"].dump() << " failures)\n";
      for (const auto& c : v["counterexamples"]) {
        os << "    at " << c["where"].get<std::string>() << ": expected " << c["expected"].get<std::string>()
           << ", got " << c["got"].get<std::string>() << "\n";
      }
    } else if (v.is_primitive()) {
      os << "  " << k << ": " << scalar(v) << "\n";
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << "  " << k << ":\n";
      for (const auto& e : v) os << "    " << e.dump() << "\n";
    } else {
      os << "  " << k << ": " << v.dump() << "\n";
    }
  }
  return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open " + tmp.string() + " for writing");
    out << text;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ConfigError("cannot move report into " + path.string());
  }
}

}  // namespace symspace::driver
