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
#include "symspace/linalg.hpp"
#include "symspace/quadspace.hpp"

using namespace symspace;
using gf::FieldCtx;
using quadspace::FormType;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Oracle: split iff (-1)^{M/2} det G is a square.
int delta_from_det(const FieldCtx& F, const FqMatrix& G) {
  const int M = static_cast<int>(G.rows());
  gf::FqElem d = linalg::determinant(FqField(F), G);
  if ((M / 2) % 2 == 1) d = F.neg(d);
  return F.quad_char(d);
}

std::uint64_t naive_isotropic(const FieldCtx& F, const FqMatrix& G) {
  CoordSpace space(F, static_cast<int>(G.rows()));
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const FqVector x = space.vector(i);
    gf::FqElem v = F.zero();
    for (std::size_t r = 0; r < G.rows(); ++r)
      for (std::size_t c = 0; c < G.cols(); ++c) v = F.add(v, F.mul(x[r], F.mul(G(r, c), x[c])));
    n += F.is_zero(v);
  }
  return n;
}

}  // namespace

TEST_CASE("isotropic counts match the closed form") {
  for (int q : {3, 5, 7, 9}) {
    FieldCtx F(q == 9 ? 3 : q, q == 9 ? 2 : 1);
    for (int M = 1; M <= (q <= 5 ? 5 : 4); ++M) {
      for (auto type : {FormType::split, FormType::nonsplit}) {
        const auto Q = quadspace::standard_quadspace(F, M, type);
        const auto n = naive_isotropic(F, Q.gram);
        CAPTURE(q);
        CAPTURE(M);
        CHECK(n == static_cast<std::uint64_t>(quadspace::isotropic_closed_form(q, M, Q.delta)));
        CHECK(quadspace::count_isotropic(Q) == n);
        if (M % 2 == 0) {
          CHECK(Q.delta == (type == FormType::split ? 1 : -1));
          CHECK(Q.delta == delta_from_det(F, Q.gram));
        } else {
          CHECK(Q.delta == 0);
        }
      }
    }
  }
}

TEST_CASE("cone function values") {
  FieldCtx F(5);
  for (int M : {2, 3, 4}) {
    for (auto type : {FormType::split, FormType::nonsplit}) {
      const auto Q = quadspace::standard_quadspace(F, M, type);
      const FnTable f = quadspace::f_ic(Q);
      CoordSpace space(F, M);
      const std::int64_t f0 = M % 2 == 0 ? 1 + Q.delta * ipow(5, (M - 2) / 2) : 1;
      CHECK(f[0] == CycNum::from_int(5, f0));
      for (std::uint64_t i = 1; i < space.size(); ++i) {
        const FqVector x = space.vector(i);
        const bool iso = F.is_zero(bilinear(F, Q.gram, x, x));
        CHECK(f[i] == CycNum::from_int(5, iso ? 1 : 0));
      }
    }
  }
}

TEST_CASE("even dimension: the cone function is an eigenfunction with eigenvalue delta q^{M/2}") {
  for (auto [p, k, M] : std::vector<std::tuple<int, int, int>>{{3, 1, 2}, {3, 1, 4}, {3, 1, 6}, {5, 1, 2}, {5, 1, 4}, {7, 1, 4}, {3, 2, 4}}) {
    FieldCtx F(p, k);
    for (auto type : {FormType::split, FormType::nonsplit}) {
      const auto Q = quadspace::standard_quadspace(F, M, type);
      const FnTable f = quadspace::f_ic(Q);
      const FnTable S = quadspace::fourier(Q, f);
      const std::int64_t lambda = Q.delta * ipow(F.q(), M / 2);
      CAPTURE(F.describe());
      CAPTURE(M);
      CAPTURE(Q.delta);
      for (std::size_t i = 0; i < f.size(); ++i) REQUIRE(S[i] == f[i].scaled(lambda));
    }
  }
}

TEST_CASE("split even dimension verifies without sign") {
  for (int p : {3, 5, 7}) {
    FieldCtx F(p);
    for (int M : {2, 4}) {
      const auto out = quadspace::verify_transform(quadspace::standard_quadspace(F, M, FormType::split));
      CHECK(out.passed);
      CHECK(out.checked == static_cast<std::uint64_t>(ipow(p, M)));
    }
  }
}

TEST_CASE("odd dimension: transform is zeta(x) G off the cone") {
  for (int p : {3, 5, 7}) {
    FieldCtx F(p);
    for (int M : {1, 3, 5}) {
      if (p == 7 && M == 5) continue;
      for (auto type : {FormType::split, FormType::nonsplit}) {
        const auto Q = quadspace::standard_quadspace(F, M, type);
        const auto out = quadspace::verify_transform(Q);
        CAPTURE(p);
        CAPTURE(M);
        CHECK(out.passed);
        // Independent check of |G|^2 and S(0) through the direct sum.
        const FnTable f = quadspace::f_ic(Q);
        CoordSpace space(F, M);
        CHECK(character_sum_at(F, Q.gram, f, space.vector(0)) == CycNum::from_int(p, ipow(p, M - 1)));
        for (std::uint64_t i = 1; i < space.size(); ++i) {
          const FqVector x = space.vector(i);
          if (F.is_zero(bilinear(F, Q.gram, x, x))) continue;
          const CycNum G = character_sum_at(F, Q.gram, f, x);
          CHECK(G.norm_squared() == CycNum::from_int(p, ipow(p, M - 1)));
          break;
        }
      }
    }
  }
}

TEST_CASE("zeta sign splits anisotropic vectors by the class of their perpendicular") {
  FieldCtx F(5);
  const auto Q = quadspace::standard_quadspace(F, 3, FormType::split);
  CoordSpace space(F, 3);
  int plus = 0, minus = 0;
  for (std::uint64_t i = 1; i < space.size(); ++i) {
    const FqVector x = space.vector(i);
    const gf::FqElem v = bilinear(F, Q.gram, x, x);
    if (F.is_zero(v)) {
      CHECK_THROWS_AS(quadspace::zeta_sign(Q, x), DomainError);
      continue;
    }
    const int z = quadspace::zeta_sign(Q, x);
    (z == 1 ? plus : minus)++;
    // The perpendicular of x has determinant det(G) / Q(x) up to squares.
    const gf::FqElem det = linalg::determinant(FqField(F), Q.gram);
    CHECK(z == F.quad_char(F.neg(F.div(det, v))));
  }
  CHECK(plus + minus == 125 - 25);
}

TEST_CASE("fault injection is detected") {
  FieldCtx F(3);
  VerifyOptions opts;
  opts.inject_fault = true;
  for (int M : {2, 3}) {
    const auto out = quadspace::verify_transform(quadspace::standard_quadspace(F, M, FormType::split), opts);
    CHECK_FALSE(out.passed);
    CHECK_FALSE(out.counterexamples.empty());
  }
}

TEST_CASE("errors") {
  FieldCtx F2(2), F3(3);
  CHECK_THROWS_AS(quadspace::standard_quadspace(F2, 2, FormType::split), UnsupportedCharacteristic);
  FqMatrix degenerate(2, 2, F3.zero());
  degenerate(0, 0) = F3.one();
  CHECK_THROWS_AS(quadspace::make_quadspace(F3, degenerate), DomainError);
  FqMatrix asym = linalg::identity(FqField(F3), 2);
  asym(0, 1) = F3.one();
  CHECK_THROWS_AS(quadspace::make_quadspace(F3, asym), DomainError);
}
