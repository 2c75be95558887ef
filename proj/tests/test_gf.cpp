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

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "symspace/errors.hpp"
#include "symspace/gf.hpp"
#include "symspace/random.hpp"

using symspace::Rng;
using symspace::gf::FieldCtx;
using symspace::gf::FqElem;
using symspace::gf::PolyFp;
namespace poly = symspace::gf::poly;

namespace {

constexpr int kIterations = 2000;
const std::vector<std::pair<int, int>> kFields = {{3, 1}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {5, 2}, {3, 3}, {2, 4}};

FqElem pick(const FieldCtx& F, Rng& rng) { return F.element(static_cast<std::uint32_t>(rng.below(F.q()))); }

// Oracle: schoolbook multiplication of coefficient vectors modulo the field modulus.
std::vector<int> naive_mul(const FieldCtx& F, const std::vector<int>& a, const std::vector<int>& b) {
  const int p = F.p(), k = F.k();
  std::vector<int> prod(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  const auto& m = F.modulus();
  for (int d = 2 * k - 1; d >= k; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    for (int i = 0; i <= k; ++i) prod[d - k + i] = ((prod[d - k + i] - c * m[i]) % p + p) % p;
  }
  prod.resize(k);
  return prod;
}

}  // namespace

TEST_CASE("prime fields use residues") {
  FieldCtx F(7);
  CHECK(F.q() == 7);
  CHECK(F.add(F.from_int(5), F.from_int(4)) == F.from_int(2));
  CHECK(F.mul(F.from_int(3), F.from_int(5)) == F.from_int(1));
  CHECK(F.from_int(-1) == F.from_int(6));
  CHECK(F.inv(F.from_int(3)) == F.from_int(5));
  CHECK_THROWS_AS(F.inv(F.zero()), symspace::DomainError);
}

TEST_CASE("extension moduli are the smallest irreducibles") {
  CHECK(FieldCtx(3, 2).modulus() == PolyFp{1, 0, 1});  // t^2 + 1
  CHECK(FieldCtx(2, 3).modulus() == PolyFp{1, 1, 0, 1});  // t^3 + t + 1
  CHECK(FieldCtx(5, 2).modulus() == PolyFp{2, 0, 1});  // t^2 + 2
  CHECK_THROWS_AS(FieldCtx(3, PolyFp{2, 0, 1}), symspace::DomainError);  // t^2 - 1 splits
}

TEST_CASE("field axioms against schoolbook arithmetic") {
  Rng rng(11);
  for (auto [p, k] : kFields) {
    FieldCtx F(p, k);
    CAPTURE(F.describe());
    for (int it = 0; it < kIterations; ++it) {
      const FqElem a = pick(F, rng), b = pick(F, rng), c = pick(F, rng);
      // Multiplication agrees with polynomial arithmetic mod the modulus.
      REQUIRE(F.coeffs(F.mul(a, b)) == naive_mul(F, F.coeffs(a), F.coeffs(b)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == F.zero());
      if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
    }
  }
}

TEST_CASE("coefficient round trip and element indexing") {
  for (auto [p, k] : kFields) {
    FieldCtx F(p, k);
    std::set<FqElem> seen;
    for (std::uint32_t i = 0; i < F.q(); ++i) {
      const FqElem x = F.element(i);
      seen.insert(x);
      CHECK(F.from_coeffs(F.coeffs(x)) == x);
    }
    CHECK(seen.size() == F.q());
  }
}

TEST_CASE("frobenius is additive and fixes the prime field") {
  Rng rng(12);
  for (auto [p, k] : kFields) {
    FieldCtx F(p, k);
    for (int it = 0; it < 200; ++it) {
      const FqElem a = pick(F, rng), b = pick(F, rng);
      CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
      CHECK(F.pow(a, F.q()) == a);
    }
    for (int r = 0; r < p; ++r) CHECK(F.pow(F.from_int(r), p) == F.from_int(r));
  }
}

TEST_CASE("trace equals the sum of conjugates") {
  for (auto [p, k] : kFields) {
    FieldCtx F(p, k);
    for (std::uint32_t i = 0; i < F.q(); ++i) {
      const FqElem x = F.element(i);
      FqElem sum = F.zero(), conj = x;
      for (int j = 0; j < k; ++j) {
        sum = F.add(sum, conj);
        conj = F.pow(conj, p);
      }
      CHECK(sum == F.from_int(F.trace(x)));
    }
  }
}

TEST_CASE("quadratic character matches the set of squares") {
  for (auto [p, k] : kFields) {
    if (p == 2) continue;
    FieldCtx F(p, k);
    std::set<FqElem> squares;
    for (std::uint32_t i = 1; i < F.q(); ++i) squares.insert(F.mul(F.element(i), F.element(i)));
    CHECK(squares.size() == (F.q() - 1) / 2);
    CHECK(F.quad_char(F.zero()) == 0);
    for (std::uint32_t i = 1; i < F.q(); ++i) {
      const FqElem x = F.element(i);
      const bool sq = squares.count(x) > 0;
      CHECK(F.quad_char(x) == (sq ? 1 : -1));
      const auto r = F.sqrt(x);
      CHECK(r.has_value() == sq);
      if (r) CHECK(F.mul(*r, *r) == x);
    }
  }
}

TEST_CASE("generator has full order and logs invert powers") {
  for (auto [p, k] : kFields) {
    FieldCtx F(p, k);
    const FqElem g = F.generator();
    std::set<FqElem> powers;
    for (std::uint32_t e = 0; e + 1 < F.q(); ++e) {
      const FqElem x = F.pow(g, e);
      powers.insert(x);
      CHECK(F.log(x) == e);
    }
    CHECK(powers.size() == F.q() - 1);
    CHECK(F.pow(g, -1) == F.inv(g));
  }
}

TEST_CASE("polynomial division identity") {
  Rng rng(13);
  for (int p : {2, 3, 5, 7}) {
    for (int it = 0; it < 300; ++it) {
      PolyFp a(rng.below(8) + 1), b(rng.below(5) + 1);
      for (auto& c : a) c = static_cast<int>(rng.below(p));
      for (auto& c : b) c = static_cast<int>(rng.below(p));
      b.back() = 1;
      auto [quo, rem] = poly::divmod(a, b, p);
      CHECK(poly::degree(rem) < poly::degree(b));
      CHECK(poly::add(poly::mul(quo, b, p), rem, p) == poly::trim(a));
      const PolyFp g = poly::gcd(a, b, p);
      if (poly::degree(g) >= 0) {
        CHECK(poly::mod(a, g, p).empty());
        CHECK(poly::mod(b, g, p).empty());
      }
    }
  }
}

// Oracle: the number of roots of f in F_{p^m} is the sum of d * #{factors of degree d}
// over d dividing m, counted here by direct evaluation in the extension field.
TEST_CASE("distinct-degree factorization agrees with root counts in extensions") {
  Rng rng(14);
  for (int p : {3, 5}) {
    std::vector<FieldCtx> ext;
    for (int m = 1; m <= 4; ++m) ext.emplace_back(p, m);
    int tested = 0;
    while (tested < 60) {
      PolyFp f(rng.below(5) + 3);
      for (auto& c : f) c = static_cast<int>(rng.below(p));
      f.back() = 1;
      if (!poly::is_squarefree(f, p)) continue;
      ++tested;
      const auto degs = poly::factor_degrees(f, p);
      int total = 0;
      for (int d : degs) total += d;
      REQUIRE(total == poly::degree(f));
      CHECK(poly::is_irreducible(f, p) == (degs.size() == 1));
      for (int m = 1; m <= 4; ++m) {
        const FieldCtx& F = ext[m - 1];
        int roots = 0;
        for (std::uint32_t i = 0; i < F.q(); ++i) {
          FqElem acc = F.zero();
          for (auto c = f.rbegin(); c != f.rend(); ++c) acc = F.add(F.mul(acc, F.element(i)), F.from_int(*c));
          roots += F.is_zero(acc);
        }
        int predicted = 0;
        for (int d : degs)
          if (m % d == 0) predicted += d;
        CHECK(roots == predicted);
      }
    }
  }
}

TEST_CASE("primality") {
  for (int n = 0; n < 2000; ++n) {
    bool prime = n >= 2;
    for (int d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    CHECK(symspace::gf::is_prime(n) == prime);
  }
  CHECK(symspace::gf::is_prime(65537));
  CHECK_FALSE(symspace::gf::is_prime(65536));
}
