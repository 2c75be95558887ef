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

#include <cstdint>
#include <span>

#include "symspace/fnspace.hpp"
#include "symspace/gf.hpp"
#include "symspace/outcome.hpp"

namespace symspace::quadspace {

enum class FormType { split, nonsplit };

// Nondegenerate quadratic space (F_q^M, gram) with p odd. delta is +1 for
// split and -1 for nonsplit even-dimensional forms, 0 when M is odd; it is
// determined by counting isotropic vectors.
struct QuadSpace {
  const gf::FieldCtx* field = nullptr;
  int M = 0;
  FqMatrix gram;
  int delta = 0;
};

// Validates symmetry and nondegeneracy and computes delta.
QuadSpace make_quadspace(const gf::FieldCtx& field, FqMatrix gram);

// diag(1, ..., 1, c) with c = 1 or the least nonsquare, chosen so that the
// form has the requested type. For odd M the type selects the square class
// of the discriminant (both classes have delta = 0).
QuadSpace standard_quadspace(const gf::FieldCtx& field, int M, FormType type);

// |{y : (y, y) = 0}| by exhaustive enumeration.
std::uint64_t count_isotropic(const gf::FieldCtx& field, const FqMatrix& gram);
inline std::uint64_t count_isotropic(const QuadSpace& Q) { return count_isotropic(*Q.field, Q.gram); }

// q^{M-1} + delta (q^{M/2} - q^{(M-2)/2}); the delta term is absent for odd M.
std::int64_t isotropic_closed_form(std::int64_t q, int M, int delta);

// +1 / -1 for even M by comparing the isotropic count with both closed
// forms, 0 for odd M. Rejects degenerate forms and p = 2.
int discriminant_type(const gf::FieldCtx& field, const FqMatrix& gram);

// Trace function of the intersection cohomology complex of the isotropic
// cone: 0 off the cone, 1 on nonzero isotropic vectors, 1 + delta q^{(M-2)/2}
// at the origin.
FnTable f_ic(const QuadSpace& Q);

// Unnormalized transform S(x) = sum_y psi((x, y)) f(y).
FnTable fourier(const QuadSpace& Q, const FnTable& f);

// For odd M and anisotropic x: +1 iff the form restricted to x^perp is split
// (the zero space counts as split).
int zeta_sign(const QuadSpace& Q, std::span<const gf::FqElem> x);

// Checks the transform of f_ic. Even M: S = q^{M/2} f pointwise. Odd M:
// S(0) = q^{M-1}, S = 0 on nonzero isotropic vectors, S(x) = zeta(x) G on
// anisotropic vectors for a single G with G conj(G) = q^{M-1}. The value
// of G is recorded as a fact.
Outcome verify_transform(const QuadSpace& Q, const VerifyOptions& opts = {});

}  // namespace symspace::quadspace
