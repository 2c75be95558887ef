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

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "symspace/driver/acceptance.hpp"
#include "symspace/driver/run.hpp"
#include "symspace/errors.hpp"

namespace {

using symspace::driver::RunConfig;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::pair<int, int> parse_dims(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw symspace::ConfigError("--dims expects N1,N2");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw symspace::ConfigError("--dims expects N1,N2");
  }
}

void add_common(CLI::App* sub, RunConfig& c, std::string& mode) {
  sub->add_option("--seed", c.seed, "Seed for sampled parts")->capture_default_str();
  sub->add_option("-o,--output", c.output, "Write the JSON report to this file");
  sub->add_flag("--json", c.json, "Print the JSON report instead of the summary");
  sub->add_flag("!--no-timing", c.timing, "Report elapsed_ms as 0 so reruns are byte-identical");
  sub->add_option("--mode", mode, "auto, exhaustive or sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}))
      ->capture_default_str();
  sub->add_option("--samples", c.samples, "Sampled target count")->capture_default_str();
  // Test-only negative control.
  sub->add_flag("--inject-fault", c.inject_fault)->group("");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite-field transform, orbit and valuation identities"};
  app.require_subcommand(1);
  RunConfig c;
  std::string mode = "auto", delta = "split", dims = "2,2", x = "zero";

  auto* quad = app.add_subcommand("fourier-quad", "Transform of the isotropic-cone function on a quadratic space");
  quad->add_option("--q", c.q, "Field size")->capture_default_str();
  quad->add_option("--M", c.M, "Dimension")->capture_default_str();
  quad->add_option("--delta", delta, "split or nonsplit")->check(CLI::IsMember({"split", "nonsplit"}))->capture_default_str();

  auto* mat = app.add_subcommand("fourier-matpair", "Transform on pairs of 2x2 matrices");
  mat->add_option("--q", c.q, "Field size")->capture_default_str();

  auto* symp = app.add_subcommand("fourier-symp", "Orthogonality and proportionality on self-adjoint endomorphisms");
  symp->add_option("--q", c.q, "Field size")->capture_default_str();
  symp->add_option("--n", c.n, "Half dimension of the symplectic space")->capture_default_str();

  auto* cnt = app.add_subcommand("counts", "Point counts of nilpotent cones");
  cnt->add_option("--family", c.family, "glsp or so")->check(CLI::IsMember({"glsp", "so"}))->capture_default_str();
  cnt->add_option("--q", c.q, "Field size")->capture_default_str();
  cnt->add_option("--n", c.n, "Half dimension (glsp)")->capture_default_str();
  cnt->add_option("--M", c.M, "Dimension (so)")->capture_default_str();
  cnt->add_option("--delta", delta, "split or nonsplit (so)")->check(CLI::IsMember({"split", "nonsplit"}))->capture_default_str();

  auto* orb = app.add_subcommand("orbits", "Signatures of nilpotent orbits for the two-vertex cyclic quiver");
  orb->add_option("--dims", dims, "N1,N2")->capture_default_str();
  orb->add_option("--q", c.q, "Field used for the round-trip check")->capture_default_str();

  auto* ps = app.add_subcommand("psi", "Valuation map from nilpotent orbits to Weyl group classes");
  ps->add_option("--case", c.psi_case, "gl22, glsp or so")->check(CLI::IsMember({"gl22", "glsp", "so"}))->capture_default_str();
  ps->add_option("--orbit", c.orbit, "Representative index 1..10 (gl22)")->capture_default_str();
  ps->add_option("--partition", c.partition, "Parts of the partition (glsp)")->delimiter(',');
  ps->add_option("--M", c.M, "Dimension (so)")->capture_default_str();
  ps->add_option("--x", x, "zero or nonzero (so)")->check(CLI::IsMember({"zero", "nonzero"}))->capture_default_str();
  ps->add_option("--precision", c.precision, "Initial series precision")->capture_default_str();

  auto* cur = app.add_subcommand("curve", "Intersection of orbit closures on the flag variety of 3-space");
  cur->add_option("--q", c.q, "Odd prime")->capture_default_str();

  auto* all = app.add_subcommand("verify-all", "Run the full acceptance suite");

  for (auto* sub : {quad, mat, symp, cnt, orb, ps, cur, all}) add_common(sub, c, mode);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    c.mode = mode == "exhaustive" ? symspace::Mode::exhaustive
             : mode == "sampled"  ? symspace::Mode::sampled
                                  : symspace::Mode::automatic;
    c.delta = delta == "split" ? 1 : -1;
    c.x_zero = x == "zero";
    std::tie(c.n1, c.n2) = parse_dims(dims);
    if (c.samples == 0) throw symspace::ConfigError("--samples must be positive");

    const auto report = symspace::driver::run(c);
    const std::string json = report.to_json(c.timing).dump(2) + "\n";
    if (!c.output.empty()) symspace::driver::write_atomic(c.output, json);
    if (c.json)
      std::cout << json;
    else
      std::cout << symspace::driver::render_text(report);
    return report.status == symspace::driver::Status::fail ? kExitFail : kExitPass;
  } catch (const symspace::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
