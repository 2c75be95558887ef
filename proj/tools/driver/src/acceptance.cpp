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

#include "symspace/driver/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "symspace/driver/run.hpp"
#include "symspace/errors.hpp"
#include "symspace/flagcurve.hpp"
#include "symspace/fnspace.hpp"
#include "symspace/matpair.hpp"
#include "symspace/psi.hpp"
#include "symspace/quadspace.hpp"
#include "symspace/quiverorb.hpp"
#include "symspace/random.hpp"
#include "symspace/sympair.hpp"

namespace symspace::driver {

namespace {

// Wall-clock limits, milliseconds.
constexpr double kLimitMs[kCriterionCount + 1] = {
    0, 120'000, 120'000, 300'000, 600'000, 60'000, 60'000, 60'000, 60'000, 120'000, 10'000, 600'000, 300'000,
};

// Every identity below is checked with exact equality (tolerance 0) in
// Z[zeta_p], Z or Q.
constexpr std::int64_t kTolerance = 0;

constexpr int kPsiSeeds = 20;
constexpr int kGlspSeeds = 10;
constexpr int kCurveSeeds = 5;
constexpr int kConjugations = 100;
constexpr int kPropertyFunctions = 100;
constexpr std::size_t kMatpairSamples = 1000;

const char* const kTitles[kCriterionCount + 1] = {
    "",
    "even-dimensional quadratic transform",
    "odd-dimensional quadratic transform",
    "matrix-pair transform and f1",
    "self-adjoint orthogonality and proportionality",
    "nilpotent point counts",
    "signature combinatorics",
    "orbit dimensions",
    "GL4 valuation table",
    "symplectic valuation map",
    "orthogonal valuation map",
    "flag curve",
    "property suites",
};

struct Tally {
  int total = 0, passed = 0;
  std::vector<std::string> failed;
  void add(bool ok, const std::string& what) {
    ++total;
    if (ok)
      ++passed;
    else if (failed.size() < 12)
      failed.push_back(what);
  }
  bool ok() const { return passed == total; }
  std::string summary(const std::string& unit) const {
    std::ostringstream os;
    os << passed << "/" << total << " " << unit;
    if (!failed.empty()) {
      os << "; failing:";
      for (const auto& f : failed) os << " " << f;
    }
    return os.str();
  }
};

quadspace::FormType form_type(int delta) { return delta == 1 ? quadspace::FormType::split : quadspace::FormType::nonsplit; }

VerifyOptions options(const SuiteOptions& s, Mode mode = Mode::automatic, std::size_t samples = 1000) {
  VerifyOptions o;
  o.mode = mode;
  o.samples = samples;
  o.seed = s.seed;
  o.inject_fault = s.inject_fault;
  return o;
}

std::string fact(const Outcome& o, const std::string& key) {
  for (const auto& [k, v] : o.facts)
    if (k == key) return v;
  return "";
}

void c1(const SuiteOptions& s, CriterionResult& r) {
  Tally t;
  Json cases = Json::array();
  for (int M : {2, 4})
    for (int q : {3, 5, 7})
      for (int delta : {1, -1}) {
        const auto F = field_for(q);
        const auto Q = quadspace::standard_quadspace(*F, M, form_type(delta));
        const Outcome o = quadspace::verify_transform(Q, options(s));
        const std::string name = "M=" + std::to_string(M) + ",q=" + std::to_string(q) + ",delta=" + std::to_string(delta);
        t.add(o.passed, name);
        cases.push_back({{"case", name}, {"result", outcome_json(o)}});
      }
  r.passed = t.ok();
  r.summary = t.summary("cases");
  r.details["cases"] = cases;
}

void c2(const SuiteOptions& s, CriterionResult& r) {
  Tally t;
  Json cases = Json::array();
  for (int M : {3, 5})
    for (int q : {3, 5})
      for (int delta : {1, -1}) {
        const auto F = field_for(q);
        const auto Q = quadspace::standard_quadspace(*F, M, form_type(delta));
        const Outcome o = quadspace::verify_transform(Q, options(s));
        const std::string name = "M=" + std::to_string(M) + ",q=" + std::to_string(q) + ",form=" + (delta == 1 ? "split" : "nonsplit");
        t.add(o.passed, name);
        cases.push_back({{"case", name}, {"G", fact(o, "G")}, {"result", outcome_json(o)}});
      }
  r.passed = t.ok();
  r.summary = t.summary("cases");
  r.details["cases"] = cases;
}

void c3(const SuiteOptions& s, CriterionResult& r) {
  Tally t;
  for (int q : {3, 5}) {
    const auto F = field_for(q);
    const Mode mode = q == 3 ? Mode::exhaustive : Mode::sampled;
    const Outcome a = matpair::verify_12a(*F, options(s, mode, kMatpairSamples));
    const Outcome f1 = matpair::verify_f1(*F, options(s, mode, kMatpairSamples));
    t.add(a.passed, "transform@q=" + std::to_string(q));
    t.add(f1.passed, "f1@q=" + std::to_string(q));
    r.details["q" + std::to_string(q)] = {{"transform", outcome_json(a)}, {"f1", outcome_json(f1)}};
  }
  r.passed = t.ok();
  r.summary = t.summary("checks");
}

void c4(const SuiteOptions& s, CriterionResult& r) {
  Tally t;
  Rng rng(s.seed);
  const auto F3 = field_for(3);
  for (int n : {1, 2, 3}) {
    const sympair::SympCtx ctx(*F3, n);
    Outcome all;
    for (int i = 0; i < 5; ++i) all.merge(sympair::verify_13a(ctx, sympair::random_flag(ctx, rng)));
    t.add(all.passed, "orthogonality@n=" + std::to_string(n));
    r.details["orthogonality_n" + std::to_string(n)] = outcome_json(all);
  }
  const std::vector<std::pair<int, int>> cases{{1, 3}, {1, 5}, {2, 3}};
  for (const auto& [n, q] : cases) {
    const auto F = field_for(q);
    const sympair::SympCtx ctx(*F, n);
    const Outcome o = sympair::verify_13b(ctx, options(s, Mode::automatic, 10'000));
    const std::string name = "proportionality@n=" + std::to_string(n) + ",q=" + std::to_string(q);
    t.add(o.passed, name);
    r.details[name] = outcome_json(o);
  }
  r.passed = t.ok();
  r.summary = t.summary("checks");
}

void c5(const SuiteOptions&, CriterionResult& r) {
  Tally t;
  Json nil = Json::array();
  for (int n : {1, 2})
    for (int q : {2, 3}) {
      const auto F = field_for(q);
      const auto got = sympair::count_nilpotent(sympair::SympCtx(*F, n));
      std::uint64_t expected = 1;
      for (int i = 0; i < 2 * n * n - 2 * n; ++i) expected *= static_cast<std::uint64_t>(q);
      t.add(got == expected, "nilpotent@n=" + std::to_string(n) + ",q=" + std::to_string(q));
      nil.push_back({{"n", n}, {"q", q}, {"count", got}, {"expected", expected}});
    }
  Json iso = Json::array();
  for (int M = 2; M <= 6; ++M)
    for (int q : {3, 5, 7})
      for (int delta : {1, -1}) {
        const auto F = field_for(q);
        const FqField Fq(*F);
        const auto Q = quadspace::standard_quadspace(*F, M, form_type(delta));
        // Type from the discriminant: split iff (-1)^{M/2} det is a square.
        int type = delta;
        if (M % 2 == 0) {
          gf::FqElem d = linalg::determinant(Fq, Q.gram);
          if ((M / 2) % 2 == 1) d = F->neg(d);
          type = F->quad_char(d);
        }
        const auto got = static_cast<std::int64_t>(quadspace::count_isotropic(Q));
        const auto expected = quadspace::isotropic_closed_form(q, M, type);
        const std::string name = "isotropic@M=" + std::to_string(M) + ",q=" + std::to_string(q) + ",delta=" + std::to_string(delta);
        t.add(got == expected && type == delta, name);
        iso.push_back({{"M", M}, {"q", q}, {"delta", delta}, {"count", got}, {"expected", expected}});
      }
  r.passed = t.ok();
  r.summary = t.summary("counts");
  r.details["nilpotent"] = nil;
  r.details["isotropic"] = iso;
}

quiverorb::Signature sig(int n1, int n2, std::vector<quiverorb::Block> blocks) {
  return quiverorb::make_signature(n1, n2, blocks);
}

void c6(const SuiteOptions& s, CriterionResult& r) {
  Tally t;
  const RationalField Q;
  const auto F5 = field_for(5);
  const FqField Fq(*F5);
  const auto sigs22 = quiverorb::enumerate_signatures(2, 2);
  t.add(sigs22.size() == 10, "ten signatures");
  r.details["signatures_2_2"] = sigs22.size();

  std::set<quiverorb::Signature> distinct;
  Json reps = Json::array();
  for (int i = 1; i <= 10; ++i) {
    const auto c = quiverorb::classify_pair(Q, quiverorb::gl22_representative(Q, i));
    distinct.insert(c);
    reps.push_back({{"orbit", i}, {"signature", c.to_string()}});
  }
  t.add(distinct.size() == 10, "distinct representatives");
  r.details["representatives"] = reps;
  r.details["distinct_representatives"] = distinct.size();

  int trips = 0, trips_ok = 0;
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2) {
      if (n1 + n2 == 0) continue;
      for (const auto& sg : quiverorb::enumerate_signatures(n1, n2)) {
        ++trips;
        if (quiverorb::classify_pair(Q, quiverorb::canonical_representative(Q, sg)) == sg &&
            quiverorb::classify_pair(Fq, quiverorb::canonical_representative(Fq, sg)) == sg)
          ++trips_ok;
      }
    }
  t.add(trips == trips_ok, "round trip");
  r.details["round_trip"] = {{"signatures", trips}, {"ok", trips_ok}};

  Rng rng(s.seed);
  int inv_ok = 0;
  for (int k = 0; k < kConjugations; ++k) {
    const int i = k % 10 + 1;
    const auto x = quiverorb::gl22_representative(Fq, i);
    const auto g = quiverorb::random_gl(*F5, 2, rng), h = quiverorb::random_gl(*F5, 2, rng);
    if (quiverorb::classify_pair(Fq, quiverorb::act(Fq, g, h, x)) == quiverorb::classify_pair(Fq, x)) ++inv_ok;
  }
  t.add(inv_ok == kConjugations, "conjugation invariance");
  r.details["conjugation_invariance"] = {{"trials", kConjugations}, {"ok", inv_ok}};

  const auto C1 = sig(2, 2, {{1, 2}, {-1, 2}});
  const auto zero22 = sig(2, 2, {{1, 1}, {1, 1}, {-1, 1}, {-1, 1}});
  t.add(!quiverorb::is_fthin(C1), "C1 thick");
  t.add(!quiverorb::is_fthin(zero22), "zero orbit thick");
  t.add(quiverorb::is_fthin(sig(1, 1, {{1, 2}})) && quiverorb::is_fthin(sig(1, 1, {{-1, 2}})), "(1,1) thin members");
  r.passed = t.ok();
  r.summary = t.summary("checks");
}

void c7(const SuiteOptions&, CriterionResult& r) {
  Tally t;
  const auto C1 = sig(2, 2, {{1, 2}, {-1, 2}});
  const int d = quiverorb::orbit_dim(C1);
  t.add(d == 4, "dim C1");
  // Point count of C1 over F_5 against 5^4.
  const auto F5 = field_for(5);
  const double ratio = static_cast<double>(quiverorb::count_orbit_points(C1, *F5)) / std::pow(5.0, d);
  t.add(ratio > 0.5 && ratio < 2.0, "C1 count scale");
  r.details["C1"] = {{"dim", d}, {"count_ratio_q5", ratio}};
  Json so = Json::array();
  const auto F7 = field_for(7);
  for (int M = 2; M <= 6; ++M) {
    const int N = M + 1;
    const int dim = quiverorb::so_orbit_dim(M);
    const bool parity = (dim % 2 == 0) == (N % 2 == 0);
    const auto Q = quadspace::standard_quadspace(*F7, M, quadspace::FormType::split);
    const double scale = static_cast<double>(quadspace::count_isotropic(Q) - 1) / std::pow(7.0, M - 1);
    t.add(dim == M - 1 && parity && scale > 0.5 && scale < 2.0, "so@M=" + std::to_string(M));
    so.push_back({{"M", M}, {"dim", dim}, {"count_ratio_q7", scale}});
  }
  r.details["so"] = so;
  r.passed = t.ok();
  r.summary = t.summary("checks");
}

void c8(const SuiteOptions& s, CriterionResult& r) {
  Tally classes, coeffs;
  Json rows = Json::array();
  for (int i = 1; i <= 10; ++i) {
    int ok = 0, cok = 0;
    std::set<std::string> flips;
    const auto expected = psi::tabulated_psi_gl22(i);
    for (int k = 1; k <= kPsiSeeds; ++k) {
      const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(k);
      if (psi::psi_gl22(i, seed) == expected) ++ok;
      const Outcome o = psi::verify_Pi(i, seed);
      if (o.passed) ++cok;
      for (const auto& [key, v] : o.facts)
        if (key == "sign_flip") flips.insert(v);
    }
    classes.add(ok == kPsiSeeds, "N" + std::to_string(i));
    coeffs.add(cok == kPsiSeeds, "P" + std::to_string(i));
    rows.push_back({{"orbit", i}, {"expected", expected.label}, {"class_ok", ok}, {"coefficients_ok", cok},
                    {"sign_flips", std::vector<std::string>(flips.begin(), flips.end())}});
  }
  r.passed = classes.ok() && coeffs.ok();
  r.summary = "classes " + classes.summary("orbits") + "; coefficients " + coeffs.summary("polynomials");
  r.details["rows"] = rows;
}

void c9(const SuiteOptions& s, CriterionResult& r) {
  Tally t;
  Json rows = Json::array();
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : sympair::partitions(n)) {
      int ok = 0;
      for (int k = 1; k <= kGlspSeeds; ++k)
        if (psi::psi_glsp(lambda, s.seed + static_cast<std::uint64_t>(k)) == lambda) ++ok;
      const std::string label = psi::partition_class(lambda).label;
      t.add(ok == kGlspSeeds, label);
      rows.push_back({{"partition", label}, {"ok", ok}});
    }
  r.passed = t.ok();
  r.summary = t.summary("partitions");
  r.details["rows"] = rows;
}

void c10(const SuiteOptions& s, CriterionResult& r) {
  Tally t;
  for (int M = 2; M <= 6; ++M)
    for (bool zero : {true, false}) {
      int ok = 0;
      for (int k = 1; k <= kPsiSeeds; ++k)
        if (psi::psi_so(zero, M, s.seed + static_cast<std::uint64_t>(k)) == psi::so_class(zero)) ++ok;
      t.add(ok == kPsiSeeds, std::string(zero ? "zero" : "nonzero") + "@M=" + std::to_string(M));
    }
  r.passed = t.ok();
  r.summary = t.summary("orbit/dimension pairs");
}

void c11(const SuiteOptions& s, CriterionResult& r) {
  Tally t;
  Json rows = Json::array();
  for (int q : {7, 11}) {
    const auto Q = flagcurve::standard_quadric(q);
    for (int k = 1; k <= kCurveSeeds; ++k) {
      const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(k);
      const std::string name = "q=" + std::to_string(q) + ",seed=" + std::to_string(seed);
      const auto g = flagcurve::find_general_position(Q, seed);
      if (!g) {
        t.add(false, name);
        continue;
      }
      const Outcome pieces = flagcurve::verify_pieces(Q, *g);
      const Outcome fp = flagcurve::elliptic_fingerprint(Q, *g);
      t.add(pieces.passed && fp.passed, name);
      rows.push_back({{"case", name}, {"pieces", outcome_json(pieces)}, {"fingerprint", outcome_json(fp)}});
    }
  }
  r.passed = t.ok();
  r.summary = t.summary("curves");
  r.details["rows"] = rows;
}

// Parseval and double-transform identities for random integer functions.
bool transform_identities(const gf::FieldCtx& F, const FqMatrix& gram, Rng& rng, Json& out) {
  const int p = F.p();
  const CoordSpace space(F, static_cast<int>(gram.rows()));
  const std::int64_t qd = static_cast<std::int64_t>(space.size());
  int parseval = 0, twice = 0;
  for (int trial = 0; trial < kPropertyFunctions; ++trial) {
    std::vector<std::int64_t> vals(space.size());
    for (auto& v : vals) v = rng.uniform(-3, 3);
    const FnTable f = FnTable::from_integers(p, vals);
    const FnTable S = fourier_transform(F, gram, f);
    CycNum energy = CycNum::from_int(p, 0);
    std::int64_t mass = 0;
    for (std::size_t i = 0; i < S.size(); ++i) {
      energy += S[i].norm_squared();
      mass += vals[i] * vals[i];
    }
    const CycNum diff = energy - CycNum::from_int(p, qd * mass);
    if (diff.is_integer() && std::llabs(diff.integer_value()) <= kTolerance) ++parseval;
    const FnTable SS = fourier_transform(F, gram, S);
    bool ok = true;
    FqVector x(gram.rows());
    for (std::uint64_t i = 0; i < space.size() && ok; ++i) {
      space.decode(i, x);
      for (auto& c : x) c = F.neg(c);
      ok = SS[i] == CycNum::from_int(p, qd * vals[space.index(x)]);
    }
    if (ok) ++twice;
  }
  out = {{"functions", kPropertyFunctions}, {"parseval_ok", parseval}, {"double_transform_ok", twice}};
  return parseval == kPropertyFunctions && twice == kPropertyFunctions;
}

void c12(const SuiteOptions& s, CriterionResult& r) {
  Tally t;
  Rng rng(s.seed);
  const auto F3 = field_for(3);
  const FqField Fq(*F3);
  {
    Json j;
    t.add(transform_identities(*F3, quadspace::standard_quadspace(*F3, 3, quadspace::FormType::split).gram, rng, j),
          "quadratic M=3");
    r.details["quadratic_M3"] = j;
  }
  {
    Json j;
    t.add(transform_identities(*F3, quadspace::standard_quadspace(*F3, 4, quadspace::FormType::nonsplit).gram, rng, j),
          "quadratic M=4");
    r.details["quadratic_M4"] = j;
  }
  {
    Json j;
    t.add(transform_identities(*F3, matpair::gram(*F3), rng, j), "matrix pair");
    r.details["matrix_pair"] = j;
  }
  {
    const sympair::SympCtx ctx(*F3, 2);
    const auto& basis = ctx.basis();
    FqMatrix gram = linalg::zeros(Fq, basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) gram(i, j) = sympair::trace_pairing(*F3, basis[i], basis[j]);
    Json j;
    t.add(transform_identities(*F3, gram, rng, j), "self-adjoint n=2");
    r.details["self_adjoint"] = j;
  }

  // Seed independence of the valuation map, with a seed range disjoint from
  // the table criteria.
  const std::uint64_t base = s.seed * 31 + 1000;
  bool seeds_ok = true;
  for (int i = 1; i <= 10; ++i) {
    const auto first = psi::psi_gl22(i, base);
    for (int k = 1; k < kPsiSeeds && seeds_ok; ++k) {
      psi::Gl22Options o;
      o.seed = base + static_cast<std::uint64_t>(k);
      o.conjugate = k % 2 == 1;
      seeds_ok = psi::sample_gl22(i, o).cls == first;
    }
  }
  t.add(seeds_ok, "gl22 seeds");
  bool glsp_ok = true;
  for (int n = 1; n <= 3; ++n)
    for (const auto& lambda : sympair::partitions(n)) {
      const auto first = psi::psi_glsp(lambda, base);
      for (int k = 1; k < kPsiSeeds && glsp_ok; ++k) glsp_ok = psi::psi_glsp(lambda, base + static_cast<std::uint64_t>(k)) == first;
    }
  t.add(glsp_ok, "glsp seeds");
  bool so_ok = true;
  for (bool zero : {true, false}) {
    const auto first = psi::psi_so(zero, 5, base);
    for (int k = 1; k < kPsiSeeds && so_ok; ++k) so_ok = psi::psi_so(zero, 5, base + static_cast<std::uint64_t>(k)) == first;
  }
  t.add(so_ok, "so seeds");

  // Determinism: the cheaper criteria serialize identically on a second run.
  bool same = true;
  for (int id : {5, 6, 7, 8, 10}) {
    SuiteOptions o = s;
    o.timing = false;
    const std::string a = criterion_json(run_criterion(id, o), false).dump();
    const std::string b = criterion_json(run_criterion(id, o), false).dump();
    same = same && a == b;
  }
  t.add(same, "determinism");
  r.details["seed_independence"] = {{"gl22", seeds_ok}, {"glsp", glsp_ok}, {"so", so_ok}};
  r.details["deterministic"] = same;
  r.passed = t.ok();
  r.summary = t.summary("properties");
}

}  // namespace

std::string criterion_title(int id) {
  if (id < 1 || id > kCriterionCount) throw ConfigError("criterion must be in [1, 12]");
  return kTitles[id];
}

CriterionResult run_criterion(int id, const SuiteOptions& opts) {
  using Fn = void (*)(const SuiteOptions&, CriterionResult&);
  static constexpr Fn fns[kCriterionCount + 1] = {nullptr, c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  r.limit_ms = kLimitMs[id];
  const auto start = std::chrono::steady_clock::now();
  try {
    fns[id](opts, r);
  } catch (const Error& e) {
    r.passed = false;
    r.summary = std::string("error: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.within_time = r.elapsed_ms <= r.limit_ms;
  if (!r.within_time) {
    r.passed = false;
    r.summary += "; over the time limit";
  }
  return r;
}

Json criterion_json(const CriterionResult& r, bool timing) {
  Json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["status"] = r.passed ? "pass" : "fail";
  j["summary"] = r.summary;
  j["limit_ms"] = static_cast<std::int64_t>(r.limit_ms);
  if (timing) j["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms);
  j["details"] = r.details;
  return j;
}

Report verify_all(const SuiteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.experiment = "verify-all";
  rep.section = "acceptance suite";
  rep.seed = opts.seed;
  rep.params = {{"inject_fault", opts.inject_fault}};
  Json list = Json::array();
  int passed = 0;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const CriterionResult r = run_criterion(id, opts);
    if (r.passed) ++passed;
    list.push_back(criterion_json(r, opts.timing));
  }
  rep.details["passed"] = passed;
  rep.details["total"] = kCriterionCount;
  rep.details["criteria"] = list;
  rep.status = passed == kCriterionCount ? Status::pass : Status::fail;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace symspace::driver
