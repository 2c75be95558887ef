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

#include <set>
#include <vector>

#include "doctest.h"
#include "symspace/errors.hpp"
#include "symspace/linalg.hpp"
#include "symspace/random.hpp"
#include "symspace/sympair.hpp"

using namespace symspace;
using gf::FieldCtx;
using sympair::Partition;
using sympair::SympCtx;

namespace {

FqVector random_vec(const FieldCtx& F, int d, Rng& rng) {
  FqVector v(d);
  for (auto& x : v) x = F.element(static_cast<std::uint32_t>(rng.below(F.q())));
  return v;
}

FqMatrix random_element(const SympCtx& ctx, Rng& rng) {
  return ctx.element(random_vec(ctx.field(), ctx.dim_E(), rng));
}

// Oracle: Jordan type from ranks of powers; the number of parts >= k is rk T^{k-1} - rk T^k.
Partition type_from_ranks(const FieldCtx& F, const FqMatrix& T) {
  const FqField FF(F);
  std::vector<std::size_t> rk{T.rows()};
  FqMatrix P = T;
  while (rk.back() > 0) {
    rk.push_back(linalg::rank(FF, P));
    P = linalg::multiply(FF, P, T);
  }
  Partition out;
  for (std::size_t k = 1; k < rk.size(); ++k) {
    const std::size_t at_least_k = rk[k - 1] - rk[k];
    const std::size_t at_least_next = k + 1 < rk.size() ? rk[k] - rk[k + 1] : 0;
    for (std::size_t i = 0; i < at_least_k - at_least_next; ++i) out.push_back(static_cast<int>(k));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST_CASE("E consists of self-adjoint operators and has dimension 2n^2 - n") {
  Rng rng(51);
  for (int p : {3, 5}) {
    FieldCtx F(p);
    for (int n = 1; n <= 3; ++n) {
      SympCtx ctx(F, n);
      CHECK(ctx.dim_E() == 2 * n * n - n);
      const FqField FF(F);
      std::vector<FqVector> flat;
      for (const auto& B : ctx.basis()) flat.push_back(B.data());
      CHECK(linalg::span_basis(FF, flat, 4 * n * n).size() == static_cast<std::size_t>(ctx.dim_E()));
      for (int it = 0; it < 50; ++it) {
        const FqMatrix T = random_element(ctx, rng);
        const FqVector x = random_vec(F, 2 * n, rng), y = random_vec(F, 2 * n, rng);
        CHECK(ctx.form(linalg::apply(FF, T, x), y) == ctx.form(x, linalg::apply(FF, T, y)));
        CHECK(ctx.is_self_adjoint(T));
      }
    }
  }
}

TEST_CASE("partitions") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11};
  for (int n = 0; n <= 6; ++n) CHECK(sympair::partitions(n).size() == counts[n]);
  CHECK(sympair::partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
}

TEST_CASE("Jordan types agree with the rank oracle") {
  Rng rng(52);
  FieldCtx F(3);
  for (int n = 1; n <= 4; ++n) {
    SympCtx ctx(F, n);
    for (const auto& lambda : sympair::partitions(n)) {
      const FqMatrix N = sympair::nilpotent_representative(ctx, lambda);
      CHECK(ctx.is_self_adjoint(N));
      CHECK(sympair::jordan_pair_type(ctx, N) == lambda);
      for (int it = 0; it < 10; ++it) {
        const FqMatrix g = sympair::random_symplectic(ctx, rng);
        // g preserves the form
        const FqField FF(F);
        CHECK(linalg::multiply(FF, linalg::transpose(FF, g), linalg::multiply(FF, ctx.omega(), g)) == ctx.omega());
        const FqMatrix C = sympair::conjugate(ctx, g, N);
        CHECK(ctx.is_self_adjoint(C));
        CHECK(sympair::jordan_pair_type(ctx, C) == lambda);
        CHECK(sympair::jordan_type(F, C) == type_from_ranks(F, C));
      }
    }
  }
}

TEST_CASE("nilpotent counts") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
    FieldCtx F(p);
    SympCtx ctx(F, n);
    std::uint64_t brute = 0;
    for (const auto& T : ctx.all_elements()) brute += linalg::is_nilpotent(FqField(F), T);
    std::uint64_t expected = 1;
    for (int i = 0; i < 2 * n * n - 2 * n; ++i) expected *= p;
    CHECK(brute == expected);
    CHECK(sympair::count_nilpotent(ctx) == brute);
    if (p != 2) {
      std::uint64_t total = 0;
      std::set<Partition> keys;
      for (const auto& [lambda, c] : sympair::nilpotent_census(ctx)) {
        total += c;
        keys.insert(lambda);
      }
      CHECK(total == brute);
      CHECK(keys.size() == sympair::partitions(n).size());
    }
  }
}

TEST_CASE("isotropic flags") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 2}}) {
    FieldCtx F(p);
    SympCtx ctx(F, n);
    const auto flags = sympair::enumerate_flags(ctx);
    const FqField FF(F);
    CHECK(flags.size() == sympair::flag_count_formula(p, n));
    std::set<std::vector<FqVector>> distinct;
    for (const auto& fl : flags) {
      REQUIRE(fl.basis.size() == static_cast<std::size_t>(2 * n));
      CHECK(linalg::span_basis(FF, fl.basis, 2 * n).size() == static_cast<std::size_t>(2 * n));
      // V_i is orthogonal to V_{2n-i}
      for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; a + b <= 2 * n - 2; ++b) CHECK(F.is_zero(ctx.form(fl.basis[a], fl.basis[b])));
      // Flags are determined by their partial spans in reduced echelon form.
      std::vector<FqVector> key;
      for (int i = 1; i <= n; ++i) {
        const auto span = linalg::span_basis(FF, std::vector<FqVector>(fl.basis.begin(), fl.basis.begin() + i), 2 * n);
        key.insert(key.end(), span.begin(), span.end());
      }
      distinct.insert(key);
    }
    CHECK(distinct.size() == flags.size());
  }
  CHECK(sympair::flag_count_formula(3, 2) == 4 * 40);
}

TEST_CASE("stabilizer and nil-stabilizer are mutual annihilators") {
  Rng rng(53);
  FieldCtx F(3);
  for (int n = 1; n <= 3; ++n) {
    SympCtx ctx(F, n);
    for (int it = 0; it < 5; ++it) {
      const auto flag = sympair::random_flag(ctx, rng);
      const auto out = sympair::verify_13a(ctx, flag);
      CHECK(out.passed);
      for (const auto& T : sympair::nil_stabilizer_space(ctx, flag)) CHECK(sympair::stabilizes(ctx, T, flag));
    }
  }
}

TEST_CASE("flag-fixed transform identity") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {3, 2}}) {
    FieldCtx F(p);
    SympCtx ctx(F, n);
    CHECK(sympair::verify_13b(ctx).passed);
  }
}

TEST_CASE("every nilpotent type meets the lowering space of a flag") {
  Rng rng(54);
  FieldCtx F(3);
  for (int n = 1; n <= 3; ++n) {
    SympCtx ctx(F, n);
    const auto types = sympair::flag_nilpotent_types(ctx, sympair::random_flag(ctx, rng));
    CHECK(types.size() == sympair::partitions(n).size());
  }
}

TEST_CASE("errors") {
  FieldCtx F(3);
  CHECK_THROWS_AS(SympCtx(F, 0), DomainError);
  SympCtx ctx(F, 2);
  CHECK_THROWS_AS(sympair::nilpotent_representative(ctx, {1}), DomainError);
  FieldCtx F2(2);
  SympCtx ctx2(F2, 1);
  CHECK_THROWS_AS(sympair::verify_13b(ctx2), UnsupportedCharacteristic);
}
