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

#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "symspace/errors.hpp"
#include "symspace/fnspace.hpp"
#include "symspace/quiverorb.hpp"
#include "symspace/random.hpp"

using namespace symspace;
using namespace symspace::quiverorb;
using gf::FieldCtx;

namespace {

using FqPair = PairNM<FqField>;
using RankData = std::vector<std::pair<std::size_t, std::size_t>>;

// Oracle: ranks of T^k restricted to V' and to V'', for k = 0 .. n1 + n2.
RankData rank_data(const FqField& f, const FqPair& x) {
  const auto T = combined(f, x);
  const std::size_t n1 = x.A.cols(), d = T.rows();
  RankData out;
  auto P = linalg::identity(f, d);
  for (std::size_t k = 0; k <= d; ++k) {
    auto first = linalg::zeros(f, d, n1), second = linalg::zeros(f, d, d - n1);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) (j < n1 ? first(i, j) : second(i, j - n1)) = P(i, j);
    out.emplace_back(linalg::rank(f, first), linalg::rank(f, second));
    P = linalg::multiply(f, P, T);
  }
  return out;
}

// The same ranks predicted from a signature: a chain of length m with top in V'
// (r = 1) alternates V', V'', ...; T^k keeps the positions j with j + k < m.
RankData predicted_ranks(const Signature& s) {
  const std::size_t d = static_cast<std::size_t>(s.n1 + s.n2);
  RankData out(d + 1, {0, 0});
  for (const auto& b : s.blocks())
    for (int j = 0; j < b.m; ++j) {
      const bool in_first = (b.r == 1) == (j % 2 == 0);
      for (int k = 0; j + k < b.m; ++k) (in_first ? out[k].first : out[k].second)++;
    }
  return out;
}

FqPair random_pair(const FqField& f, int n1, int n2, Rng& rng) {
  const auto& F = f.ctx();
  FqPair x{linalg::zeros(f, n2, n1), linalg::zeros(f, n1, n2)};
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n1; ++j) x.A(i, j) = F.element(static_cast<std::uint32_t>(rng.below(F.q())));
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) x.B(i, j) = F.element(static_cast<std::uint32_t>(rng.below(F.q())));
  return x;
}

// Oracle: rank of the tangent map (X, Y) -> (Y A - A X, X B - B Y) at a random
// point of the orbit, over a large prime field.
int tangent_rank(const Signature& s, Rng& rng) {
  FieldCtx F(101);
  const FqField f(F);
  auto x = canonical_representative(f, s);
  x = act(f, random_gl(F, s.n1, rng), random_gl(F, s.n2, rng), x);
  const int n1 = s.n1, n2 = s.n2;
  std::vector<FqVector> images;
  auto push = [&](const linalg::Mat<FqField>& X, const linalg::Mat<FqField>& Y) {
    const auto a = linalg::sub(f, linalg::multiply(f, Y, x.A), linalg::multiply(f, x.A, X));
    const auto b = linalg::sub(f, linalg::multiply(f, X, x.B), linalg::multiply(f, x.B, Y));
    FqVector v = a.data();
    v.insert(v.end(), b.data().begin(), b.data().end());
    images.push_back(std::move(v));
  };
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      auto X = linalg::zeros(f, n1, n1);
      X(i, j) = f.one();
      push(X, linalg::zeros(f, n2, n2));
    }
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) {
      auto Y = linalg::zeros(f, n2, n2);
      Y(i, j) = f.one();
      push(linalg::zeros(f, n1, n1), Y);
    }
  const std::size_t width = static_cast<std::size_t>(2 * n1 * n2);
  return width == 0 ? 0 : static_cast<int>(linalg::span_basis(f, images, width).size());
}

}  // namespace

TEST_CASE("dimension vectors of blocks") {
  CHECK(g_vec(1, 1) == std::pair{1, 0});
  CHECK(g_vec(-1, 1) == std::pair{0, 1});
  CHECK(g_vec(1, 4) == std::pair{2, 2});
  CHECK(g_vec(-1, 4) == std::pair{2, 2});
  CHECK(g_vec(1, 3) == std::pair{2, 1});
  CHECK(g_vec(-1, 3) == std::pair{1, 2});
}

TEST_CASE("signature enumeration") {
  CHECK(enumerate_signatures(1, 0).size() == 1);
  const auto s11 = enumerate_signatures(1, 1);
  CHECK(s11.size() == 3);
  std::set<Signature> expected{make_signature(1, 1, {{1, 1}, {-1, 1}}), make_signature(1, 1, {{1, 2}}),
                               make_signature(1, 1, {{-1, 2}})};
  CHECK(std::set<Signature>(s11.begin(), s11.end()) == expected);
  CHECK(enumerate_signatures(2, 2).size() == 10);
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2)
      for (const auto& s : enumerate_signatures(n1, n2)) {
        int a = 0, b = 0;
        for (const auto& blk : s.blocks()) {
          auto [x, y] = g_vec(blk.r, blk.m);
          a += x;
          b += y;
        }
        CHECK(a == n1);
        CHECK(b == n2);
      }
}

TEST_CASE("thin signatures") {
  CHECK_FALSE(is_fthin(make_signature(2, 2, {{1, 2}, {-1, 2}})));
  CHECK(is_fthin(make_signature(1, 1, {{1, 2}})));
  CHECK_FALSE(is_fthin(make_signature(2, 2, {{1, 1}, {1, 1}, {-1, 1}, {-1, 1}})));
  CHECK(is_fthin(make_signature(2, 2, {{1, 4}})));
}

TEST_CASE("round trip through canonical representatives") {
  const RationalField Q;
  FieldCtx F5(5);
  const FqField f5(F5);
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2)
      for (const auto& s : enumerate_signatures(n1, n2)) {
        CHECK(classify_pair(Q, canonical_representative(Q, s)) == s);
        const auto x = canonical_representative(f5, s);
        CHECK(classify_pair(f5, x) == s);
        CHECK(rank_data(f5, x) == predicted_ranks(s));
      }
}

TEST_CASE("classification agrees with the rank oracle on random nilpotent pairs") {
  Rng rng(61);
  FieldCtx F(3);
  const FqField f(F);
  for (auto [n1, n2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    int hits = 0;
    for (int it = 0; it < 20000 && hits < 300; ++it) {
      const auto x = random_pair(f, n1, n2, rng);
      if (!linalg::is_nilpotent(f, combined(f, x))) continue;
      ++hits;
      CHECK(rank_data(f, x) == predicted_ranks(classify_pair(f, x)));
    }
    CHECK(hits > 50);
  }
}

TEST_CASE("rank data separates the signatures in dims (2,2)") {
  std::set<RankData> seen;
  for (const auto& s : enumerate_signatures(2, 2)) seen.insert(predicted_ranks(s));
  CHECK(seen.size() == 10);
}

TEST_CASE("classification is constant on orbits") {
  Rng rng(62);
  FieldCtx F(5);
  const FqField f(F);
  for (auto [n1, n2] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
    const auto sigs = enumerate_signatures(n1, n2);
    for (int it = 0; it < 100; ++it) {
      const auto& s = sigs[rng.below(sigs.size())];
      const auto x = act(f, random_gl(F, n1, rng), random_gl(F, n2, rng), canonical_representative(f, s));
      CHECK(classify_pair(f, x) == s);
    }
  }
}

TEST_CASE("tabulated representatives") {
  FieldCtx F(3);
  const FqField f(F);
  CHECK(classify_pair(f, gl22_representative(f, 8)) == make_signature(2, 2, {{1, 2}, {1, 1}, {-1, 1}}));
  CHECK(classify_pair(f, gl22_representative(f, 10)) == make_signature(2, 2, {{1, 1}, {1, 1}, {-1, 1}, {-1, 1}}));
  for (int i = 1; i <= 10; ++i) {
    const auto x = gl22_representative(f, i);
    CHECK(rank_data(f, x) == predicted_ranks(classify_pair(f, x)));
  }
  CHECK_THROWS_AS(gl22_representative(f, 11), DomainError);
}

TEST_CASE("orbit dimensions") {
  Rng rng(63);
  CHECK(orbit_dim(make_signature(2, 2, {{1, 1}, {1, 1}, {-1, 1}, {-1, 1}})) == 0);
  CHECK(orbit_dim(make_signature(2, 2, {{1, 2}, {-1, 2}})) == 4);
  CHECK(orbit_dim(make_signature(2, 2, {{1, 4}})) == 6);
  bool odd = false;
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n2 <= 3; ++n2)
      for (const auto& s : enumerate_signatures(n1, n2)) {
        const int d = orbit_dim(s);
        CHECK(d == tangent_rank(s, rng));
        if (n1 == 2 && n2 == 2) odd = odd || d % 2 == 1;
        for (int r : {1, -1}) {
          const auto reg = g_vec(r, n1 + n2);
          if (reg == std::pair{n1, n2} && s.blocks().size() > 1) CHECK(d < orbit_dim(make_signature(n1, n2, {{r, n1 + n2}})));
        }
      }
  CHECK(odd);
}

// Oracle: orbit-stabilizer, |orbit| * |stabilizer| = |GL(V')| |GL(V'')|.
TEST_CASE("orbit point counts") {
  for (int p : {2, 3}) {
    FieldCtx F(p);
    const FqField f(F);
    const auto census = orbit_census(F, 2, 2);
    CHECK(census.size() == 10);
    std::uint64_t total = 0, brute = 0;
    for (const auto& s : enumerate_signatures(2, 2)) {
      const std::uint64_t n = count_orbit_points(s, F);
      total += n;
      CHECK(n * stabilizer_order(F, canonical_representative(f, s)) == gl_order(p, 2) * gl_order(p, 2));
    }
    CoordSpace space(F, 8);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      const auto c = space.vector(i);
      FqPair x{linalg::zeros(f, 2, 2), linalg::zeros(f, 2, 2)};
      for (int k = 0; k < 4; ++k) {
        x.A(k / 2, k % 2) = c[k];
        x.B(k / 2, k % 2) = c[4 + k];
      }
      brute += linalg::is_nilpotent(f, combined(f, x));
    }
    CHECK(total == brute);
    CHECK(count_orbit_points(make_signature(2, 2, {{1, 1}, {1, 1}, {-1, 1}, {-1, 1}}), F) == 1);
  }
  CHECK(gl_order(3, 2) == 48);
}

TEST_CASE("orthogonal orbit of a nonzero isotropic vector") {
  for (int M = 2; M <= 7; ++M) CHECK(so_orbit_dim(M) == M - 1);
  CHECK_THROWS_AS(so_orbit_dim(1), DomainError);
}

TEST_CASE("non-nilpotent pairs are rejected") {
  const RationalField Q;
  PairNM<RationalField> x{linalg::identity(Q, 1), linalg::identity(Q, 1)};
  CHECK_THROWS_AS(classify_pair(Q, x), DomainError);
}
