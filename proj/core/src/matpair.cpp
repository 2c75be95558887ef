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

#include "symspace/matpair.hpp"

#include <map>
#include <set>

#include "symspace/errors.hpp"
#include "symspace/fields.hpp"
#include "symspace/parallel.hpp"

namespace symspace::matpair {

using gf::FieldCtx;
using gf::FqElem;

namespace m2 {

M2 mul(const FieldCtx& F, const M2& x, const M2& y) {
  M2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[2 * i + j] = F.add(F.mul(x[2 * i], y[j]), F.mul(x[2 * i + 1], y[2 + j]));
  return r;
}

FqElem det(const FieldCtx& F, const M2& x) { return F.sub(F.mul(x[0], x[3]), F.mul(x[1], x[2])); }

FqElem trace(const FieldCtx& F, const M2& x) { return F.add(x[0], x[3]); }

bool is_zero(const M2& x) {
  for (auto e : x)
    if (e.code != 0) return false;
  return true;
}

M2 inverse(const FieldCtx& F, const M2& x) {
  const FqElem d = F.inv(det(F, x));
  return {F.mul(d, x[3]), F.mul(d, F.neg(x[1])), F.mul(d, F.neg(x[2])), F.mul(d, x[0])};
}

M2 random_invertible(const FieldCtx& F, Rng& rng) {
  for (;;) {
    M2 g;
    for (auto& e : g) e = F.element(static_cast<std::uint32_t>(rng.below(F.q())));
    if (!F.is_zero(det(F, g))) return g;
  }
}

}  // namespace m2

namespace {

// Projective points of F_q^2: (1, t) for t in F_q, then (0, 1).
std::vector<std::array<FqElem, 2>> lines(const FieldCtx& F) {
  std::vector<std::array<FqElem, 2>> out;
  for (std::uint32_t t = 0; t < F.q(); ++t) out.push_back({F.one(), F.element(t)});
  out.push_back({F.zero(), F.one()});
  return out;
}

bool kills(const FieldCtx& F, const M2& m, const std::array<FqElem, 2>& v) {
  return F.is_zero(F.add(F.mul(m[0], v[0]), F.mul(m[1], v[1]))) &&
         F.is_zero(F.add(F.mul(m[2], v[0]), F.mul(m[3], v[1])));
}

// Column space of m contained in the span of v.
bool image_in(const FieldCtx& F, const M2& m, const std::array<FqElem, 2>& v) {
  for (int j = 0; j < 2; ++j)
    if (!F.is_zero(F.sub(F.mul(v[0], m[2 + j]), F.mul(v[1], m[j])))) return false;
  return true;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void require_odd(const FieldCtx& F) {
  if (F.p() == 2) throw UnsupportedCharacteristic("matrix-pair transform needs odd characteristic");
}

std::string show(const FieldCtx& F, const Pair22& x) {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) s += (i ? "," : "") + F.format(x.A[i]);
  s += ";";
  for (int i = 0; i < 4; ++i) s += (i ? "," : "") + F.format(x.B[i]);
  return s + ")";
}

// q = 3 is enumerated completely; larger q is sampled.
constexpr std::uint64_t kExhaustiveLimit = 100'000;

std::vector<Pair22> rs_targets(const FieldCtx& F, const VerifyOptions& opts, bool& sampled) {
  const std::uint64_t total = ipow(F.q(), 8);
  sampled = opts.mode == Mode::sampled || (opts.mode == Mode::automatic && total > kExhaustiveLimit);
  std::vector<Pair22> out;
  CoordSpace space(F, 8, 1ull << 40);
  FqVector c(8);
  if (!sampled) {
    for (std::uint64_t i = 0; i < total; ++i) {
      space.decode(i, c);
      Pair22 x = from_coords(c);
      if (in_Ers(F, x)) out.push_back(x);
    }
    return out;
  }
  Rng rng(opts.seed);
  std::set<std::uint64_t> seen;
  std::uint64_t attempts = 0;
  while (out.size() < opts.samples) {
    if (++attempts > 1000 * opts.samples + 100000) throw DegenerateSampling("could not sample enough rs points");
    const std::uint64_t i = rng.below(total);
    if (seen.contains(i)) continue;
    space.decode(i, c);
    Pair22 x = from_coords(c);
    if (!in_Ers(F, x)) continue;
    seen.insert(i);
    out.push_back(x);
  }
  return out;
}

}  // namespace

Pair22 from_coords(std::span<const FqElem> c) {
  if (c.size() != 8) throw DomainError("E has 8 coordinates");
  Pair22 x;
  for (int i = 0; i < 4; ++i) {
    x.A[i] = c[i];
    x.B[i] = c[4 + i];
  }
  return x;
}

FqVector to_coords(const Pair22& x) {
  FqVector c(8);
  for (int i = 0; i < 4; ++i) {
    c[i] = x.A[i];
    c[4 + i] = x.B[i];
  }
  return c;
}

FqElem pairing(const FieldCtx& F, const Pair22& x, const Pair22& y) {
  return F.add(m2::trace(F, m2::mul(F, x.A, y.B)), m2::trace(F, m2::mul(F, x.B, y.A)));
}

FqMatrix gram(const FieldCtx& F) {
  FqMatrix g(8, 8, F.zero());
  // tr(A B~) = sum_{i,j} A_ij B~_ji
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      g(2 * i + j, 4 + 2 * j + i) = F.one();
      g(4 + 2 * j + i, 2 * i + j) = F.one();
    }
  return g;
}

bool in_E0(const FieldCtx& F, const Pair22& x) {
  return F.is_zero(m2::det(F, x.A)) && F.is_zero(m2::det(F, x.B)) && m2::is_zero(m2::mul(F, x.A, x.B)) &&
         m2::is_zero(m2::mul(F, x.B, x.A));
}

FqElem disc_AB(const FieldCtx& F, const Pair22& x) {
  const M2 ab = m2::mul(F, x.A, x.B);
  const FqElem t = m2::trace(F, ab);
  const FqElem d = m2::det(F, ab);
  return F.sub(F.mul(t, t), F.mul(F.from_int(4), d));
}

bool in_Ers(const FieldCtx& F, const Pair22& x) {
  return !F.is_zero(m2::det(F, x.A)) && !F.is_zero(m2::det(F, x.B)) && !F.is_zero(disc_AB(F, x));
}

int zeta12(const FieldCtx& F, const Pair22& x) {
  require_odd(F);
  if (!in_Ers(F, x)) throw DomainError("zeta12 needs a regular semisimple pair");
  return F.quad_char(disc_AB(F, x));
}

Pair22 act(const FieldCtx& F, const M2& g, const M2& h, const Pair22& x) {
  const M2 gi = m2::inverse(F, g);
  const M2 hi = m2::inverse(F, h);
  return {m2::mul(F, m2::mul(F, h, x.A), gi), m2::mul(F, m2::mul(F, g, x.B), hi)};
}

std::int64_t f_value(const FieldCtx& F, const Pair22& x) {
  if (!in_E0(F, x)) return 0;
  if (m2::is_zero(x.A) && m2::is_zero(x.B)) return 1 + 2 * static_cast<std::int64_t>(F.q());
  return 1;
}

FnTable f12(const FieldCtx& F) {
  CoordSpace space(F, 8);
  std::vector<std::int64_t> vals(space.size());
  FqVector c(8);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    space.decode(i, c);
    vals[i] = f_value(F, from_coords(c));
  }
  return FnTable::from_integers(F.p(), vals);
}

std::int64_t f1_value(const FieldCtx& F, const Pair22& x) {
  const auto L = lines(F);
  std::int64_t count = 0, lp = 0, lpp = 0;
  for (const auto& v : L)
    if (image_in(F, x.B, v) && kills(F, x.A, v)) ++lp;
  for (const auto& v : L)
    if (image_in(F, x.A, v) && kills(F, x.B, v)) ++lpp;
  count = lp * lpp;
  return count;
}

Support support(const FieldCtx& F) {
  Support s;
  // E0 = pairs of singular matrices with AB = BA = 0; enumerate singular A then B.
  std::vector<M2> singular;
  CoordSpace sq(F, 4);
  FqVector c(4);
  for (std::uint64_t i = 0; i < sq.size(); ++i) {
    sq.decode(i, c);
    M2 m{c[0], c[1], c[2], c[3]};
    if (F.is_zero(m2::det(F, m))) singular.push_back(m);
  }
  for (const auto& a : singular)
    for (const auto& b : singular) {
      Pair22 x{a, b};
      if (!m2::is_zero(m2::mul(F, a, b)) || !m2::is_zero(m2::mul(F, b, a))) continue;
      s.points.push_back(x);
      s.f.push_back(f_value(F, x));
      s.f1.push_back(f1_value(F, x));
    }
  return s;
}

CycNum transform_at(const FieldCtx& F, const std::vector<Pair22>& points, const std::vector<std::int64_t>& weights,
                    const Pair22& x) {
  std::vector<std::int64_t> sums(static_cast<std::size_t>(F.p()), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (weights[i] == 0) continue;
    sums[F.trace(pairing(F, x, points[i]))] += weights[i];
  }
  return CycNum::from_power_sums(F.p(), sums);
}

Outcome verify_12a(const FieldCtx& F, const VerifyOptions& opts) {
  require_odd(F);
  const int p = F.p();
  const std::int64_t q2 = static_cast<std::int64_t>(F.q()) * F.q();
  Support s = support(F);
  if (opts.inject_fault) s.f.back() += 1;
  Outcome out;
  bool sampled = false;
  auto targets = rs_targets(F, opts, sampled);
  out.sampled = sampled;
  std::vector<CycNum> S(targets.size());
  parallel_for(targets.size(), [&](std::size_t t) { S[t] = transform_at(F, s.points, s.f, targets[t]); });
  std::uint64_t plus = 0, minus = 0;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const int z = zeta12(F, targets[t]);
    (z == 1 ? plus : minus)++;
    const CycNum expected = CycNum::from_int(p, q2 * z);
    out.expect(S[t] == expected, show(F, targets[t]), expected.to_string(), S[t].to_string());
  }
  out.fact("E0_size", std::to_string(s.points.size()));
  out.fact("targets", std::to_string(targets.size()));
  out.fact("zeta_plus", std::to_string(plus));
  out.fact("zeta_minus", std::to_string(minus));
  return out;
}

Outcome verify_f1(const FieldCtx& F, const VerifyOptions& opts) {
  require_odd(F);
  const int p = F.p();
  const std::int64_t q = F.q();
  Support s = support(F);
  if (opts.inject_fault) s.f1.back() += 1;
  Outcome out;

  const Pair22 zero{};
  const std::int64_t at0 = f1_value(F, zero);
  out.expect(at0 == (q + 1) * (q + 1), "f1(0;0)", std::to_string((q + 1) * (q + 1)), std::to_string(at0));

  // f1 vanishes off E0 (its support lies in E0 by construction), so the
  // pointwise comparison with f + q^2 [x = 0] reduces to the support list.
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const bool origin = s.points[i] == zero;
    const std::int64_t expected = s.f[i] + (origin ? q * q : 0);
    out.expect(s.f1[i] == expected, "f1" + show(F, s.points[i]), std::to_string(expected), std::to_string(s.f1[i]));
  }

  bool sampled = false;
  auto targets = rs_targets(F, opts, sampled);
  out.sampled = sampled;
  std::vector<CycNum> S(targets.size());
  parallel_for(targets.size(), [&](std::size_t t) { S[t] = transform_at(F, s.points, s.f1, targets[t]); });
  std::uint64_t zeros = 0;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const int z = zeta12(F, targets[t]);
    const CycNum expected = CycNum::from_int(p, q * q * (z + 1));
    if (S[t].is_zero()) ++zeros;
    out.expect(S[t] == expected, show(F, targets[t]), expected.to_string(), S[t].to_string());
  }
  out.fact("targets", std::to_string(targets.size()));
  out.fact("transform_zero_count", std::to_string(zeros));
  return out;
}

}  // namespace symspace::matpair
