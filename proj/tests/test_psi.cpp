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
#include "symspace/psi.hpp"
#include "symspace/quiverorb.hpp"
#include "symspace/random.hpp"
#include "symspace/sympair.hpp"

using namespace symspace;
using namespace symspace::psi;
using series::TruncSeries;

namespace {

constexpr int kSeeds = 5;
constexpr int K = 10;

TruncSeries mono(long long c, int e) { return TruncSeries::monomial(c, e, K); }

// (t, d) of (X - a e^i)(X - b e^j)
std::pair<TruncSeries, TruncSeries> from_roots(long long a, int i, long long b, int j) {
  return {mono(a, i) + mono(b, j), mono(a * b, i + j)};
}

using SMat = std::vector<std::vector<TruncSeries>>;

// Oracle: Laplace expansion along the first row.
TruncSeries laplace(const SMat& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  TruncSeries acc(m[0][0].precision());
  for (std::size_t c = 0; c < n; ++c) {
    SMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<TruncSeries> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const TruncSeries term = m[0][c] * laplace(minor);
    acc = c % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

TruncSeries coeff_series(const std::vector<Rational>& c, int precision) {
  // c[k] multiplies e^{k+1}
  std::vector<Rational> v(precision, 0);
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(precision) && k < c.size(); ++k) v[k + 1] = c[k];
  return TruncSeries(v, precision);
}

}  // namespace

TEST_CASE("quadratic classes from root valuations") {
  CHECK(classify_quadratic(mono(3, 1), mono(5, 1)) == gamma(4));      // X^2 - 3e X + 5e
  CHECK(classify_quadratic(mono(2, 1), mono(7, 3)) == gamma(3));      // slopes 1 and 2
  CHECK(classify_quadratic(mono(3, 2), mono(2, 4)) == gamma(1));      // roots e^2, 2e^2
  CHECK(classify_quadratic(mono(3, 1), mono(2, 2)) == gamma(2));      // roots e, 2e
  // roots e(1 +- sqrt(e)): integral valuations, discriminant 4e^3 of odd valuation
  CHECK(classify_quadratic(mono(2, 1), mono(1, 2) - mono(1, 3)) == gamma(5));
}

TEST_CASE("rational roots are classified by the parity of their valuations") {
  Rng rng(81);
  for (int it = 0; it < 300; ++it) {
    const int i = static_cast<int>(rng.below(4)), j = static_cast<int>(rng.below(4));
    long long a = 0, b = 0;
    while (a == 0) a = rng.uniform(-9, 9);
    while (b == 0 || (i == j && b == a)) b = rng.uniform(-9, 9);
    const auto [t, d] = from_roots(a, i, b, j);
    const WClass expected = (i % 2 == 0 && j % 2 == 0) ? gamma(1) : (i % 2 == 1 && j % 2 == 1) ? gamma(2) : gamma(3);
    CHECK(classify_quadratic(t, d) == expected);
    // X -> cX with a unit c does not change the class
    const TruncSeries c = TruncSeries({Rational(rng.uniform(1, 5)), Rational(rng.uniform(-5, 5))}, K);
    CHECK(classify_quadratic(t * c, d * c * c) == expected);
  }
}

TEST_CASE("half-integral valuations give the ramified class") {
  Rng rng(82);
  for (int it = 0; it < 100; ++it) {
    const int e = 2 * static_cast<int>(rng.below(3)) + 1;
    long long x = 0;
    while (x == 0) x = rng.uniform(-9, 9);
    const TruncSeries t = mono(rng.uniform(-9, 9), (e + 1) / 2 + static_cast<int>(rng.below(2)));
    CHECK(classify_quadratic(t, mono(x, e)) == gamma(4));
  }
}

TEST_CASE("unresolved data is reported as insufficient precision") {
  CHECK_THROWS_AS(classify_quadratic(TruncSeries(K), TruncSeries(K)), InsufficientPrecision);
}

TEST_CASE("characteristic polynomial matches the Laplace determinant") {
  Rng rng(83);
  for (int n = 1; n <= 4; ++n) {
    for (int it = 0; it < 10; ++it) {
      SMat A(n, std::vector<TruncSeries>(n, TruncSeries(6)));
      for (auto& row : A)
        for (auto& e : row) {
          std::vector<Rational> c(6);
          for (auto& v : c) v = rng.uniform(-4, 4);
          e = TruncSeries(c, 6);
        }
      const auto chi = charpoly(A);
      REQUIRE(chi.size() == static_cast<std::size_t>(n + 1));
      CHECK(chi[n] == TruncSeries::constant(1, 6));
      // n + 1 evaluation points determine the polynomial
      for (int x = -n; x <= 0; ++x) {
        SMat m = A;
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) m[r][c] = (r == c ? TruncSeries::constant(x, 6) : TruncSeries(6)) - A[r][c];
        TruncSeries value(6);
        TruncSeries power = TruncSeries::constant(1, 6);
        for (int k = 0; k <= n; ++k) {
          value += chi[k] * power;
          power = power.scaled(x);
        }
        CHECK(value == laplace(m));
      }
    }
  }
}

TEST_CASE("sampled trace and determinant agree with a direct product") {
  const RationalField Q;
  for (int i = 1; i <= 10; ++i) {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      Gl22Options opts;
      opts.seed = seed;
      const auto s = sample_gl22(i, opts);
      const int P = s.precision;
      const auto N = quiverorb::gl22_representative(Q, i);
      SMat A(2, std::vector<TruncSeries>(2, TruncSeries(P))), B = A;
      A[0][0] = coeff_series(s.xi.a, P), A[0][1] = coeff_series(s.xi.c, P);
      A[1][0] = coeff_series(s.xi.b, P), A[1][1] = coeff_series(s.xi.d, P);
      B[0][0] = coeff_series(s.xi.x, P), B[0][1] = coeff_series(s.xi.z, P);
      B[1][0] = coeff_series(s.xi.y, P), B[1][1] = coeff_series(s.xi.u, P);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          A[r][c][0] += N.A(r, c);
          B[r][c][0] += N.B(r, c);
        }
      SMat AB(2, std::vector<TruncSeries>(2, TruncSeries(P)));
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) AB[r][c] = A[r][0] * B[0][c] + A[r][1] * B[1][c];
      CHECK(s.t == AB[0][0] + AB[1][1]);
      CHECK(s.d == laplace(AB));
      CHECK(s.cls == classify_quadratic(s.t, s.d));
    }
  }
}

TEST_CASE("leading determinant coefficients of selected orbits") {
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    Gl22Options opts;
    opts.seed = seed;
    const auto s1 = sample_gl22(1, opts);
    CHECK(s1.d[0] == 0);
    CHECK(s1.d[1] == -s1.xi.x[0]);
    const auto s6 = sample_gl22(6, opts);
    CHECK(s6.d[2] == -s6.xi.a[0] * s6.xi.d[0] + s6.xi.b[0] * s6.xi.c[0]);
    const auto s8 = sample_gl22(8, opts);
    CHECK(s8.t[1] == s8.xi.z[0]);
    const auto s10 = sample_gl22(10, opts);
    const auto& x = s10.xi;
    CHECK(s10.t[2] == x.a[0] * x.x[0] + x.b[0] * x.z[0] + x.c[0] * x.y[0] + x.d[0] * x.u[0]);
  }
}

TEST_CASE("gl22 classes are seed and conjugation independent") {
  for (int i = 1; i <= 10; ++i) {
    const WClass expected = tabulated_psi_gl22(i);
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      CHECK(psi_gl22(i, seed) == expected);
      Gl22Options opts;
      opts.seed = 1000 + seed;
      opts.conjugate = true;
      CHECK(sample_gl22(i, opts).cls == expected);
    }
  }
  CHECK(tabulated_psi_gl22(10) == gamma(1));
  CHECK(tabulated_psi_gl22(1) == gamma(4));
  CHECK(tabulated_psi_gl22(5) == gamma(2));
}

TEST_CASE("coefficient checks pass where the displayed signs hold") {
  for (int i : {5, 6, 7, 9, 10}) {
    const auto out = verify_Pi(i, 7);
    CAPTURE(i);
    CHECK(out.passed);
  }
}

TEST_CASE("glsp valuation map returns the Jordan type") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lambda : sympair::partitions(n))
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto out = psi_glsp(lambda, seed);
        CHECK(out == lambda);
        int weight = 0;
        for (int part : out) weight += part;
        CHECK(weight == n);
      }
  CHECK(partition_class({2, 1}).label == "(2,1)");
}

TEST_CASE("orthogonal valuation map separates the two orbits") {
  for (int M = 2; M <= 6; ++M)
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      CHECK(psi_so(true, M, seed) == so_class(true));
      CHECK(psi_so(false, M, seed) == so_class(false));
    }
  CHECK(so_class(true) != so_class(false));
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(psi_gl22(0, 1), DomainError);
  CHECK_THROWS_AS(psi_gl22(11, 1), DomainError);
  CHECK_THROWS_AS(psi_so(false, 1, 1), DomainError);
  CHECK_THROWS_AS(gamma(6), DomainError);
}
