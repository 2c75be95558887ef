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
#include <vector>

#include "symspace/fnspace.hpp"
#include "symspace/gf.hpp"
#include "symspace/outcome.hpp"
#include "symspace/random.hpp"

namespace symspace::matpair {

// Row-major 2x2 matrix over F_q.
using M2 = std::array<gf::FqElem, 4>;

// (A; B) with A : V' -> V'' and B : V'' -> V', dim V' = dim V'' = 2.
// Coordinates on E are (a00, a01, a10, a11, b00, b01, b10, b11).
struct Pair22 {
  M2 A{};
  M2 B{};
  friend bool operator==(const Pair22&, const Pair22&) = default;
};

namespace m2 {
M2 mul(const gf::FieldCtx& F, const M2& x, const M2& y);
gf::FqElem det(const gf::FieldCtx& F, const M2& x);
gf::FqElem trace(const gf::FieldCtx& F, const M2& x);
bool is_zero(const M2& x);
M2 inverse(const gf::FieldCtx& F, const M2& x);
M2 random_invertible(const gf::FieldCtx& F, Rng& rng);
}  // namespace m2

Pair22 from_coords(std::span<const gf::FqElem> c);
FqVector to_coords(const Pair22& x);

// tr(A B~) + tr(B A~).
gf::FqElem pairing(const gf::FieldCtx& F, const Pair22& x, const Pair22& y);
// Gram matrix of the pairing in the coordinate basis.
FqMatrix gram(const gf::FieldCtx& F);

// A, B singular, AB = 0, BA = 0.
bool in_E0(const gf::FieldCtx& F, const Pair22& x);
// A, B invertible and charpoly(AB) has nonzero discriminant.
bool in_Ers(const gf::FieldCtx& F, const Pair22& x);
// Discriminant of the characteristic polynomial of AB.
gf::FqElem disc_AB(const gf::FieldCtx& F, const Pair22& x);
// +1 if the eigenvalues of AB lie in F_q, -1 otherwise. Requires in_Ers.
int zeta12(const gf::FieldCtx& F, const Pair22& x);

// (h A g^-1; g B h^-1).
Pair22 act(const gf::FieldCtx& F, const M2& g, const M2& h, const Pair22& x);

// f: 1 on E0 minus the origin, 1 + 2q at the origin, 0 elsewhere.
std::int64_t f_value(const gf::FieldCtx& F, const Pair22& x);
FnTable f12(const gf::FieldCtx& F);

// Number of line pairs (L', L'') with B V'' in L' in ker A and A V' in L'' in ker B.
std::int64_t f1_value(const gf::FieldCtx& F, const Pair22& x);

// Points of E0 (support of f and f1) as coordinate-space indices, with values.
struct Support {
  std::vector<Pair22> points;
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> f1;
};
Support support(const gf::FieldCtx& F);

// Unnormalized transform sum_y psi(pairing(x, y)) w(y) for w supported on s.
CycNum transform_at(const gf::FieldCtx& F, const std::vector<Pair22>& points,
                    const std::vector<std::int64_t>& weights, const Pair22& x);

// For every tested x in E_rs: transform of f at x equals q^2 zeta(x).
// Exhaustive over E_rs when q^8 <= 10^5 (unless mode forces sampling).
Outcome verify_12a(const gf::FieldCtx& F, const VerifyOptions& opts = {});

// f1(0;0) = (q+1)^2, f1 = f + q^2 [x = 0] pointwise, and transform of f1
// equals q^2 (zeta + 1) on the tested E_rs points.
Outcome verify_f1(const gf::FieldCtx& F, const VerifyOptions& opts = {});

}  // namespace symspace::matpair
