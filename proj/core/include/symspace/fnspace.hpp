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
#include <vector>

#include "symspace/cyclotomic.hpp"
#include "symspace/fields.hpp"
#include "symspace/gf.hpp"
#include "symspace/linalg.hpp"

namespace symspace {

using FqMatrix = linalg::Matrix<gf::FqElem>;
using FqVector = std::vector<gf::FqElem>;

// Coordinate space F_q^dim with its canonical lexicographic enumeration:
// index = sum_j code(x_j) q^{dim-1-j}, so x_0 is the most significant digit.
class CoordSpace {
 public:
  CoordSpace(const gf::FieldCtx& field, int dim, std::uint64_t max_size = 1ull << 26);

  const gf::FieldCtx& field() const { return *field_; }
  int dim() const { return dim_; }
  std::uint64_t size() const { return size_; }

  FqVector vector(std::uint64_t index) const;
  void decode(std::uint64_t index, std::span<gf::FqElem> out) const;
  std::uint64_t index(std::span<const gf::FqElem> v) const;

 private:
  const gf::FieldCtx* field_;
  int dim_;
  std::uint64_t size_;
};

// Exact-valued function on F_q^dim, values in Z[zeta_p] indexed by the
// lexicographic enumeration of CoordSpace.
struct FnTable {
  int p = 0;
  std::vector<CycNum> values;

  std::size_t size() const { return values.size(); }
  const CycNum& operator[](std::size_t i) const { return values[i]; }
  static FnTable from_integers(int p, std::span<const std::int64_t> ints);
  friend bool operator==(const FnTable&, const FnTable&) = default;
};

// Symmetric bilinear form value x^T gram y.
gf::FqElem bilinear(const gf::FieldCtx& field, const FqMatrix& gram, std::span<const gf::FqElem> x,
                    std::span<const gf::FqElem> y);

// Unnormalized transform S(x) = sum_y psi(x^T gram y) f(y) for every x,
// with psi(t) = zeta_p^{Tr(t)}. Computed by a separable transform along
// each coordinate followed by the substitution x -> gram^T x, so the cost
// is O(q^dim * dim * q * p) instead of O(q^{2 dim}).
FnTable fourier_transform(const gf::FieldCtx& field, const FqMatrix& gram, const FnTable& f);

// The same sum evaluated directly at one target, iterating only over the
// support of f. Used for sampled verification of large spaces.
CycNum character_sum_at(const gf::FieldCtx& field, const FqMatrix& gram, const FnTable& f,
                        std::span<const gf::FqElem> x);

// Additive character psi(t) = zeta_p^{Tr(t)} as an exact cyclotomic number.
CycNum add_char(const gf::FieldCtx& field, gf::FqElem t);

}  // namespace symspace
