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

#include "symspace/driver/run.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "symspace/driver/acceptance.hpp"
#include "symspace/errors.hpp"
#include "symspace/flagcurve.hpp"
#include "symspace/matpair.hpp"
#include "symspace/psi.hpp"
#include "symspace/quadspace.hpp"
#include "symspace/quiverorb.hpp"
#include "symspace/random.hpp"
#include "symspace/sympair.hpp"

namespace symspace::driver {

namespace {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::automatic:
      return "auto";
    case Mode::exhaustive:
      return "exhaustive";
    case Mode::sampled:
      return "sampled";
  }
  return "auto";
}

VerifyOptions verify_options(const RunConfig& c) {
  VerifyOptions o;
  o.mode = c.mode;
  o.samples = c.samples;
  o.seed = c.seed;
  o.inject_fault = c.inject_fault;
  return o;
}

Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

std::uint64_t checked_pow(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > UINT64_MAX / q) throw BudgetExceeded("count exceeds 64 bits");
    r *= q;
  }
  return r;
}

std::string partition_label(const std::vector<int>& l) { return psi::partition_class(l).label; }

void fourier_quad(const RunConfig& c, Report& r) {
  r.section = "quadratic-space transform";
  r.params = {{"q", c.q}, {"M", c.M}, {"delta", c.delta}, {"mode", mode_name(c.mode)}, {"samples", c.samples}};
  if (c.M < 1) throw ConfigError("--M must be positive");
  if (c.delta != 1 && c.delta != -1) throw ConfigError("--delta must be split or nonsplit");
  const auto F = field_for(c.q);
  const auto Q = quadspace::standard_quadspace(*F, c.M, c.delta == 1 ? quadspace::FormType::split
                                                                      : quadspace::FormType::nonsplit);
  const Outcome out = quadspace::verify_transform(Q, verify_options(c));
  r.details["transform"] = outcome_json(out);
  r.status = status_of(out.passed);
}

void fourier_matpair(const RunConfig& c, Report& r) {
  r.section = "matrix-pair transform";
  r.params = {{"q", c.q}, {"mode", mode_name(c.mode)}, {"samples", c.samples}};
  const auto F = field_for(c.q);
  const Outcome a = matpair::verify_12a(*F, verify_options(c));
  const Outcome f1 = matpair::verify_f1(*F, verify_options(c));
  r.details["transform"] = outcome_json(a);
  r.details["f1"] = outcome_json(f1);
  r.status = status_of(a.passed && f1.passed);
}

void fourier_symp(const RunConfig& c, Report& r) {
  r.section = "self-adjoint transform";
  r.params = {{"q", c.q}, {"n", c.n}, {"mode", mode_name(c.mode)}, {"samples", c.samples}};
  if (c.n < 1) throw ConfigError("--n must be positive");
  const auto F = field_for(c.q);
  const sympair::SympCtx ctx(*F, c.n);
  Rng rng(c.seed);
  Outcome orth;
  Json flags = Json::array();
  for (int i = 0; i < 5; ++i) {
    const Outcome o = sympair::verify_13a(ctx, sympair::random_flag(ctx, rng));
    flags.push_back(outcome_json(o));
    orth.merge(o);
  }
  const Outcome prop = sympair::verify_13b(ctx, verify_options(c));
  r.details["orthogonality"] = outcome_json(orth);
  r.details["proportionality"] = outcome_json(prop);
  r.status = status_of(orth.passed && prop.passed);
}

void counts(const RunConfig& c, Report& r) {
  r.section = "nilpotent point counts";
  const auto F = field_for(c.q);
  if (c.family == "glsp") {
    r.params = {{"family", c.family}, {"q", c.q}, {"n", c.n}};
    if (c.n < 1) throw ConfigError("--n must be positive");
    const sympair::SympCtx ctx(*F, c.n);
    const auto census = sympair::nilpotent_census(ctx);
    std::uint64_t count = 0;
    Json by_type = Json::object();
    for (const auto& [lambda, k] : census) {
      by_type[partition_label(lambda)] = k;
      count += k;
    }
    const std::uint64_t expected = checked_pow(static_cast<std::uint64_t>(c.q), 2 * c.n * c.n - 2 * c.n);
    r.details["count"] = count;
    r.details["expected"] = expected;
    r.details["by_pair_type"] = by_type;
    r.status = status_of(count == expected);
  } else if (c.family == "so") {
    r.params = {{"family", c.family}, {"q", c.q}, {"M", c.M}, {"delta", c.delta}};
    if (c.M < 1) throw ConfigError("--M must be positive");
    const auto Q = quadspace::standard_quadspace(*F, c.M, c.delta == 1 ? quadspace::FormType::split
                                                                        : quadspace::FormType::nonsplit);
    const auto count = static_cast<std::int64_t>(quadspace::count_isotropic(Q));
    const auto expected = quadspace::isotropic_closed_form(c.q, c.M, c.delta);
    r.details["count"] = count;
    r.details["expected"] = expected;
    r.status = status_of(count == expected);
  } else {
    throw ConfigError("--family must be glsp or so");
  }
}

void orbits(const RunConfig& c, Report& r) {
  r.section = "quiver orbit classification";
  r.params = {{"n1", c.n1}, {"n2", c.n2}, {"q", c.q}};
  if (c.n1 < 0 || c.n2 < 0 || c.n1 + c.n2 < 1) throw ConfigError("--dims must be nonnegative and not both zero");
  if (c.n1 + c.n2 > 10) throw ConfigError("--dims exceeds the enumeration budget (n1 + n2 <= 10)");
  const auto F = field_for(c.q);
  const FqField Fq(*F);
  bool ok = true;
  Json list = Json::array();
  const auto sigs = quiverorb::enumerate_signatures(c.n1, c.n2);
  for (const auto& s : sigs) {
    const bool round_trip = quiverorb::classify_pair(Fq, quiverorb::canonical_representative(Fq, s)) == s;
    ok = ok && round_trip;
    list.push_back({{"signature", s.to_string()},
                    {"orbit_dim", quiverorb::orbit_dim(s)},
                    {"fthin", quiverorb::is_fthin(s)},
                    {"round_trip", round_trip}});
  }
  r.details["count"] = sigs.size();
  r.details["signatures"] = list;
  if (c.n1 == 2 && c.n2 == 2) {
    Json reps = Json::array();
    for (int i = 1; i <= 10; ++i)
      reps.push_back({{"orbit", i}, {"signature", quiverorb::classify_pair(Fq, quiverorb::gl22_representative(Fq, i)).to_string()}});
    r.details["representatives"] = reps;
  }
  r.status = status_of(ok);
}

void psi_run(const RunConfig& c, Report& r) {
  r.section = "valuation map";
  if (c.psi_case == "gl22") {
    r.params = {{"case", c.psi_case}, {"orbit", c.orbit}, {"precision", c.precision}};
    if (c.orbit < 1 || c.orbit > 10) throw ConfigError("--orbit must be in [1, 10]");
    psi::Gl22Options o;
    o.seed = c.seed;
    o.precision = c.precision;
    const auto s = psi::sample_gl22(c.orbit, o);
    const auto expected = psi::tabulated_psi_gl22(c.orbit);
    const Outcome coeffs = psi::verify_Pi(c.orbit, c.seed);
    r.details["class"] = s.cls.label;
    r.details["expected"] = expected.label;
    r.details["trace"] = s.t.to_string();
    r.details["det"] = s.d.to_string();
    r.details["attempts"] = s.attempts;
    r.details["coefficients"] = outcome_json(coeffs);
    r.status = status_of(s.cls == expected && coeffs.passed);
  } else if (c.psi_case == "glsp") {
    std::vector<int> lambda = c.partition;
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    int n = 0;
    for (int m : lambda) {
      if (m < 1) throw ConfigError("--partition parts must be positive");
      n += m;
    }
    if (n > 6) throw ConfigError("--partition weight exceeds the desk-scale budget (n <= 6)");
    r.params = {{"case", c.psi_case}, {"partition", partition_label(lambda)}, {"precision", c.precision}};
    const auto got = psi::psi_glsp(lambda, c.seed, 50, c.precision);
    r.details["class"] = partition_label(got);
    r.details["expected"] = partition_label(lambda);
    r.status = status_of(got == lambda);
  } else if (c.psi_case == "so") {
    r.params = {{"case", c.psi_case}, {"M", c.M}, {"x", c.x_zero ? "zero" : "nonzero"}, {"precision", c.precision}};
    if (c.M < 2) throw ConfigError("--M must be at least 2");
    const auto got = psi::psi_so(c.x_zero, c.M, c.seed, 50, c.precision);
    const auto expected = psi::so_class(c.x_zero);
    r.details["class"] = got.label;
    r.details["expected"] = expected.label;
    r.status = status_of(got == expected);
  } else {
    throw ConfigError("--case must be gl22, glsp or so");
  }
}

Json mat3_json(const flagcurve::Mat3& m) {
  Json j = Json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

void curve(const RunConfig& c, Report& r) {
  r.section = "flag curve";
  r.params = {{"q", c.q}};
  if (c.q < 3 || !gf::is_prime(static_cast<std::uint64_t>(c.q)))
    throw ConfigError("curve needs an odd prime --q");
  const auto Q = flagcurve::standard_quadric(c.q);
  const auto g = flagcurve::find_general_position(Q, c.seed);
  if (!g) throw DegenerateSampling("no element in general position found");
  const auto pts = flagcurve::point_intersection(Q, *g);
  const auto tan = flagcurve::tangent_intersection(Q, *g);
  const Outcome pieces = flagcurve::verify_pieces(Q, *g);
  const Outcome fp = flagcurve::elliptic_fingerprint(Q, *g);
  const auto table = flagcurve::count_Eij(Q, *g, 1);
  Json t = Json::array();
  for (const auto& row : table) t.push_back(row);
  r.details["g"] = mat3_json(*g);
  r.details["point_factor_degrees"] = pts.factor_degrees;
  r.details["tangent_factor_degrees"] = tan.factor_degrees;
  r.details["orbit_table"] = t;
  r.details["pieces"] = outcome_json(pieces);
  r.details["fingerprint"] = outcome_json(fp);
  r.status = status_of(pieces.passed && fp.passed);
}

}  // namespace

std::unique_ptr<gf::FieldCtx> field_for(int q) {
  if (q < 2 || q > (1 << 16)) throw ConfigError("--q must be a prime power in [2, 65536]");
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0, rest = q;
  while (rest % p == 0) rest /= p, ++k;
  if (rest != 1) throw ConfigError("--q must be a prime power");
  return std::make_unique<gf::FieldCtx>(p, k);
}

Report run(const RunConfig& c) {
  static const std::map<std::string, std::function<void(const RunConfig&, Report&)>> table = {
      {"fourier-quad", fourier_quad}, {"fourier-matpair", fourier_matpair}, {"fourier-symp", fourier_symp},
      {"counts", counts},             {"orbits", orbits},                   {"psi", psi_run},
      {"curve", curve},
  };
  const auto start = std::chrono::steady_clock::now();
  if (c.command == "verify-all") return verify_all({c.seed, c.inject_fault, c.timing});
  const auto it = table.find(c.command);
  if (it == table.end()) throw ConfigError("unknown experiment " + c.command);
  Report r;
  r.experiment = c.command;
  r.seed = c.seed;
  try {
    it->second(c, r);
  } catch (const UnsupportedCharacteristic& e) {
    r.status = Status::fail;
    r.details["error"] = std::string("unsupported characteristic: ") + e.what();
  } catch (const BudgetExceeded& e) {
    r.status = Status::fail;
    r.details["error"] = std::string("budget exceeded: ") + e.what();
  } catch (const DegenerateSampling& e) {
    r.status = Status::fail;
    r.details["error"] = std::string("degenerate sampling: ") + e.what();
  } catch (const InsufficientPrecision& e) {
    r.status = Status::fail;
    r.details["error"] = std::string("insufficient precision: ") + e.what();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace symspace::driver
