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

#include <vector>

#include "doctest.h"
#include "symspace/errors.hpp"
#include "symspace/matpair.hpp"
#include "symspace/quiverorb.hpp"
#include "symspace/random.hpp"

using namespace symspace;
using gf::FieldCtx;
using matpair::Pair22;

namespace {

Pair22 random_pair(const FieldCtx& F, Rng& rng) {
  Pair22 x;
  for (auto& v : x.A) v = F.element(static_cast<std::uint32_t>(rng.below(F.q())));
  for (auto& v : x.B) v = F.element(static_cast<std::uint32_t>(rng.below(F.q())));
  return x;
}

// Random point of E0: A = u v^T, B = s t^T with v.s = 0 and t.u = 0 kills both products.
Pair22 random_e0(const FieldCtx& F, Rng& rng) {
  auto r = [&] { return F.element(static_cast<std::uint32_t>(rng.below(F.q()))); };
  const gf::FqElem u0 = r(), u1 = r(), v0 = r(), v1 = r(), k = r(), l = r();
  // s orthogonal to v, t orthogonal to u
  const gf::FqElem s0 = F.mul(k, v1), s1 = F.neg(F.mul(k, v0));
  const gf::FqElem t0 = F.mul(l, u1), t1 = F.neg(F.mul(l, u0));
  Pair22 x;
  x.A = {F.mul(u0, v0), F.mul(u0, v1), F.mul(u1, v0), F.mul(u1, v1)};
  x.B = {F.mul(s0, t0), F.mul(s0, t1), F.mul(s1, t0), F.mul(s1, t1)};
  return x;
}

}  // namespace

TEST_CASE("pairing is symmetric, matches the gram matrix and is invariant") {
  Rng rng(41);
  for (int p : {3, 5, 7}) {
    FieldCtx F(p);
    const FqMatrix G = matpair::gram(F);
    for (int it = 0; it < 300; ++it) {
      const Pair22 x = random_pair(F, rng), y = random_pair(F, rng);
      const auto b = matpair::pairing(F, x, y);
      CHECK(b == matpair::pairing(F, y, x));
      CHECK(b == bilinear(F, G, matpair::to_coords(x), matpair::to_coords(y)));
      const auto g = matpair::m2::random_invertible(F, rng), h = matpair::m2::random_invertible(F, rng);
      CHECK(matpair::pairing(F, matpair::act(F, g, h, x), matpair::act(F, g, h, y)) == b);
    }
  }
}

TEST_CASE("coordinates round trip") {
  Rng rng(42);
  FieldCtx F(5);
  for (int it = 0; it < 100; ++it) {
    const Pair22 x = random_pair(F, rng);
    CHECK(matpair::from_coords(matpair::to_coords(x)) == x);
  }
  CHECK_THROWS_AS(matpair::from_coords(FqVector(7)), DomainError);
}

TEST_CASE("f, E0 membership and the rs class are K-invariant") {
  Rng rng(43);
  for (int p : {3, 5}) {
    FieldCtx F(p);
    for (int it = 0; it < 500; ++it) {
      const Pair22 x = it % 2 ? random_pair(F, rng) : random_e0(F, rng);
      const auto g = matpair::m2::random_invertible(F, rng), h = matpair::m2::random_invertible(F, rng);
      const Pair22 y = matpair::act(F, g, h, x);
      CHECK(matpair::in_E0(F, x) == matpair::in_E0(F, y));
      CHECK(matpair::f_value(F, x) == matpair::f_value(F, y));
      CHECK(matpair::f1_value(F, x) == matpair::f1_value(F, y));
      CHECK(matpair::in_Ers(F, x) == matpair::in_Ers(F, y));
      if (matpair::in_Ers(F, x)) CHECK(matpair::zeta12(F, x) == matpair::zeta12(F, y));
      if (it % 2 == 0) CHECK(matpair::in_E0(F, x));
    }
  }
}

TEST_CASE("special values") {
  for (int p : {3, 5, 7}) {
    FieldCtx F(p);
    const Pair22 zero{};
    CHECK(matpair::f_value(F, zero) == 1 + 2 * p);
    CHECK(matpair::f1_value(F, zero) == (p + 1) * (p + 1));
  }
}

// Oracle: E0 is the union of the nilpotent orbits with blocks of size at most 2 and
// rank A, rank B at most 1, counted by the orbit classifier.
TEST_CASE("E0 size agrees with the orbit census") {
  FieldCtx F(3);
  const auto s = matpair::support(F);
  std::uint64_t expected = 0;
  for (const auto& [sig, n] : quiverorb::orbit_census(F, 2, 2)) {
    bool ok = true;
    for (const auto& b : sig.blocks()) ok = ok && b.m <= 2;
    ok = ok && sig.count(1, 2) <= 1 && sig.count(-1, 2) <= 1;
    if (ok) expected += n;
  }
  CHECK(expected == 129);
  CHECK(s.points.size() == expected);
}

TEST_CASE("support transform agrees with the full fast transform") {
  Rng rng(44);
  FieldCtx F(3);
  const auto s = matpair::support(F);
  const FnTable f = matpair::f12(F);
  const FnTable S = fourier_transform(F, matpair::gram(F), f);
  CoordSpace space(F, 8);
  for (int it = 0; it < 200; ++it) {
    const std::uint64_t i = rng.below(space.size());
    CHECK(matpair::transform_at(F, s.points, s.f, matpair::from_coords(space.vector(i))) == S[i]);
  }
}

TEST_CASE("transform identities on regular semisimple pairs") {
  FieldCtx F3(3), F5(5);
  const auto a = matpair::verify_12a(F3);
  CHECK(a.passed);
  CHECK_FALSE(a.sampled);
  CHECK(matpair::verify_f1(F3).passed);
  VerifyOptions sampled;
  sampled.mode = Mode::sampled;
  sampled.samples = 300;
  const auto b = matpair::verify_12a(F5, sampled);
  CHECK(b.passed);
  CHECK(b.sampled);
  CHECK(matpair::verify_f1(F5, sampled).passed);
}

TEST_CASE("fault injection is detected") {
  FieldCtx F(3);
  VerifyOptions opts;
  opts.inject_fault = true;
  CHECK_FALSE(matpair::verify_12a(F, opts).passed);
  CHECK_FALSE(matpair::verify_f1(F, opts).passed);
}
