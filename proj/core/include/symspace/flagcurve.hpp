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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "symspace/gf.hpp"
#include "symspace/outcome.hpp"
#include "symspace/random.hpp"

namespace symspace::flagcurve {

// 3x3 matrix over F_p, entries in [0, p).
using Mat3 = std::array<std::array<int, 3>, 3>;

namespace mat3 {
Mat3 identity();
Mat3 diag(int a, int b, int c, int p);
Mat3 mul(const Mat3& a, const Mat3& b, int p);
Mat3 transpose(const Mat3& a);
int det(const Mat3& a, int p);
// Throws DomainError when singular.
Mat3 inverse(const Mat3& a, int p);
Mat3 scalar(int c, int p);
}  // namespace mat3

// Nondegenerate ternary quadratic form over F_p, p an odd prime.
struct Quadric3 {
  int p = 0;
  Mat3 gram{};
};

Quadric3 make_quadric(int p, const Mat3& gram);
// diag(1, 1, -1)
Quadric3 standard_quadric(int p);

// A flag L in P over F_{p^m}: L = span(line), P = {v : plane . v = 0}.
struct Flag3 {
  std::array<gf::FqElem, 3> line;
  std::array<gf::FqElem, 3> plane;
};

// 0: L in Q, P in Q'; 1: L in Q only; 2: P in Q' only; 3: neither.
int orbit_of(const gf::FieldCtx& F, const Quadric3& Q, const Flag3& fl);
// (g L, g P) for g over F_p.
Flag3 translate(const gf::FieldCtx& F, const Mat3& g, const Flag3& fl);

Mat3 random_gl3(int p, Rng& rng);
// Product of reflections in anisotropic vectors of Q.
Mat3 random_orthogonal(const Quadric3& Q, Rng& rng, int reflections = 3);

// Intersection of the conics x^T G1 x = 0 and x^T G2 x = 0 over F_p, read
// from the binary quartic obtained by parametrizing the first conic.
struct ConicPair {
  int p = 0;
  gf::PolyFp quartic;  // dehomogenized at t = 1; a degree drop is a root at infinity
  bool identical = false;
  bool squarefree = false;
  std::vector<int> factor_degrees;  // including the root at infinity, when present

  // |C1 ∩ C2 (F_{p^m})|; requires squarefree.
  std::uint64_t count(int m) const;
  // Least m over which all four points are rational; requires squarefree.
  int splitting_degree() const;
};

ConicPair intersect_conics(int p, const Mat3& G1, const Mat3& G2);
// Q ∩ gQ and Q' ∩ gQ' (the latter as conics in the dual plane).
ConicPair point_intersection(const Quadric3& Q, const Mat3& g);
ConicPair tangent_intersection(const Quadric3& Q, const Mat3& g);

// Q ∩ gQ is four distinct geometric points: the quartic is squarefree of
// degree 4 and its point counts over F_{p^m}, m = 1..12, never exceed 4 and
// reach 4 for some m.
bool general_position(const Quadric3& Q, const Mat3& g);
std::optional<Mat3> find_general_position(const Quadric3& Q, std::uint64_t seed, int max_tries = 200);

// Points of the conic x^T G x = 0 over F, enumerated through a rational
// parametrization (p^m + 1 of them).
std::vector<std::array<gf::FqElem, 3>> conic_points(const gf::FieldCtx& F, const Mat3& G);
// Brute-force count of common points of two conics over P^2(F).
std::uint64_t count_common_points(const gf::FieldCtx& F, const Mat3& G1, const Mat3& G2);

inline constexpr std::uint64_t kFlagBudget = 200'000'000;

// table[i][j] = |O_i ∩ g O_j| over F_{p^m}, by enumerating all flags.
using Table4 = std::array<std::array<std::uint64_t, 4>, 4>;
Table4 count_Eij(const Quadric3& Q, const Mat3& g, int m, std::uint64_t budget = kFlagBudget);

// E = {L in Q, L in P, P in gQ'} over F_{p^m}, split into its four pieces,
// with the histogram of rational fibre sizes of E -> Q.
struct CurveCount {
  int m = 1;
  std::uint64_t total = 0;
  std::uint64_t e00 = 0, e02 = 0, e10 = 0, e12 = 0;
  std::array<std::uint64_t, 3> fibres{};  // number of L in Q(F_{p^m}) with 0, 1, 2 points above
};
CurveCount count_E(const Quadric3& Q, const Mat3& g, int m, std::uint64_t budget = kFlagBudget);

// Genus-one fingerprint from N_1, N_2: Hasse bound and N_2 = q^2 + 1 - (a^2 - 2q).
Outcome elliptic_fingerprint(const Quadric3& Q, const Mat3& g);
// Four points in E_02 and E_10 over the splitting fields, E_00 empty, and
// exactly four branch points of E -> Q.
Outcome verify_pieces(const Quadric3& Q, const Mat3& g, std::uint64_t budget = kFlagBudget);

}  // namespace symspace::flagcurve
