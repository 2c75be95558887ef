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
#include "symspace/fnspace.hpp"
#include "symspace/random.hpp"

using namespace symspace;
using gf::FieldCtx;
using gf::FqElem;

namespace {

FqMatrix random_gram(const FieldCtx& F, int dim, Rng& rng, bool symmetric) {
  FqMatrix g(dim, dim, F.zero());
  for (int i = 0; i < dim; ++i)
    for (int j = symmetric ? i : 0; j < dim; ++j) {
      g(i, j) = F.element(static_cast<std::uint32_t>(rng.below(F.q())));
      if (symmetric) g(j, i) = g(i, j);
    }
  return g;
}

FnTable random_fn(const FieldCtx& F, int dim, Rng& rng) {
  CoordSpace space(F, dim);
  std::vector<std::int64_t> v(space.size());
  for (auto& x : v) x = rng.uniform(-3, 3);
  return FnTable::from_integers(F.p(), v);
}

// Oracle: the defining double sum, with the pairing x^T G y evaluated entrywise.
CycNum naive_transform(const FieldCtx& F, const FqMatrix& G, const FnTable& f, const FqVector& x) {
  const int dim = static_cast<int>(G.rows());
  CoordSpace space(F, dim);
  CycNum s = CycNum::from_int(F.p(), 0);
  for (std::uint64_t j = 0; j < space.size(); ++j) {
    const FqVector y = space.vector(j);
    FqElem b = F.zero();
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) b = F.add(b, F.mul(x[r], F.mul(G(r, c), y[c])));
    s += f[j] * CycNum::zeta_pow(F.p(), F.trace(b));
  }
  return s;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("coordinate indexing round trip") {
  FieldCtx F(3, 2);
  CoordSpace space(F, 3);
  CHECK(space.size() == 729);
  for (std::uint64_t i = 0; i < space.size(); ++i) CHECK(space.index(space.vector(i)) == i);
  CHECK_THROWS_AS(CoordSpace(F, 20), BudgetExceeded);
}

TEST_CASE("fast transform matches the defining sum") {
  Rng rng(31);
  for (auto [p, k, dim] : std::vector<std::tuple<int, int, int>>{{3, 1, 2}, {3, 1, 3}, {5, 1, 2}, {3, 2, 2}, {7, 1, 2}}) {
    FieldCtx F(p, k);
    CoordSpace space(F, dim);
    for (bool symmetric : {true, false}) {
      const FqMatrix G = random_gram(F, dim, rng, symmetric);
      const FnTable f = random_fn(F, dim, rng);
      const FnTable S = fourier_transform(F, G, f);
      for (int it = 0; it < 12; ++it) {
        const std::uint64_t xi = rng.below(space.size());
        const FqVector x = space.vector(xi);
        CHECK(S[xi] == naive_transform(F, G, f, x));
        CHECK(S[xi] == character_sum_at(F, G, f, x));
      }
    }
  }
}

TEST_CASE("transform is linear") {
  Rng rng(32);
  FieldCtx F(5);
  const FqMatrix G = random_gram(F, 2, rng, true);
  const FnTable f = random_fn(F, 2, rng), g = random_fn(F, 2, rng);
  FnTable h = f;
  for (std::size_t i = 0; i < h.size(); ++i) h.values[i] = f[i].scaled(3) - g[i];
  const FnTable Sf = fourier_transform(F, G, f), Sg = fourier_transform(F, G, g), Sh = fourier_transform(F, G, h);
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(Sh[i] == Sf[i].scaled(3) - Sg[i]);
}

TEST_CASE("parseval and inversion for nondegenerate symmetric forms") {
  Rng rng(33);
  for (auto [p, k, dim] : std::vector<std::tuple<int, int, int>>{{3, 1, 3}, {5, 1, 2}, {3, 2, 2}}) {
    FieldCtx F(p, k);
    CoordSpace space(F, dim);
    FqMatrix G(dim, dim, F.zero());
    for (int i = 0; i < dim; ++i) G(i, i) = F.from_int(1 + i % 2);
    const std::int64_t qM = ipow(F.q(), dim);
    for (int it = 0; it < 5; ++it) {
      const FnTable f = random_fn(F, dim, rng);
      const FnTable S = fourier_transform(F, G, f);
      CycNum energy = CycNum::from_int(p, 0), mass = CycNum::from_int(p, 0);
      for (std::size_t i = 0; i < f.size(); ++i) {
        energy += S[i].norm_squared();
        mass += f[i].norm_squared();
      }
      REQUIRE(energy.is_integer());
      CHECK(energy.integer_value() == qM * mass.integer_value());
      const FnTable SS = fourier_transform(F, G, S);
      for (std::uint64_t i = 0; i < space.size(); ++i) {
        FqVector x = space.vector(i);
        for (auto& c : x) c = F.neg(c);
        CHECK(SS[i] == f[space.index(x)].scaled(qM));
      }
    }
  }
}

TEST_CASE("shape mismatches are rejected") {
  FieldCtx F(3);
  FqMatrix G(2, 2, F.zero());
  CHECK_THROWS_AS(fourier_transform(F, G, FnTable{3, std::vector<CycNum>(4)}), DomainError);
}
