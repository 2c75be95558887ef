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
#include <map>
#include <vector>

#include "symspace/fnspace.hpp"
#include "symspace/gf.hpp"
#include "symspace/outcome.hpp"
#include "symspace/random.hpp"

namespace symspace::sympair {

using Partition = std::vector<int>;

// V = F_q^{2n} with <x, y> = x^T omega y, omega = [[0, I], [-I, 0]].
// E = {T : <Tx, y> = <x, Ty>}, i.e. omega T alternating; basis fixed at
// construction, coordinates of T in E refer to it.
class SympCtx {
 public:
  SympCtx(const gf::FieldCtx& field, int n);

  const gf::FieldCtx& field() const { return *field_; }
  int n() const { return n_; }
  int dim_V() const { return 2 * n_; }
  int dim_E() const { return static_cast<int>(basis_.size()); }
  const FqMatrix& omega() const { return omega_; }
  const std::vector<FqMatrix>& basis() const { return basis_; }

  gf::FqElem form(std::span<const gf::FqElem> x, std::span<const gf::FqElem> y) const;
  bool is_self_adjoint(const FqMatrix& T) const;
  FqMatrix element(std::span<const gf::FqElem> coords) const;
  // All q^{dim E} elements in coordinate order; throws BudgetExceeded above max.
  std::vector<FqMatrix> all_elements(std::uint64_t max = 1u << 22) const;

 private:
  const gf::FieldCtx* field_;
  int n_;
  FqMatrix omega_;
  std::vector<FqMatrix> basis_;
};

// Solution space of the linear condition (omega T) alternating.
std::vector<FqMatrix> basis_of_E(const gf::FieldCtx& field, const FqMatrix& omega);

// tr(T T').
gf::FqElem trace_pairing(const gf::FieldCtx& field, const FqMatrix& T, const FqMatrix& U);

// Jordan type of a nilpotent matrix, parts in decreasing order.
Partition jordan_type(const gf::FieldCtx& field, const FqMatrix& T);
// Jordan type of nilpotent T in E with every multiplicity halved.
Partition jordan_pair_type(const SympCtx& ctx, const FqMatrix& T);
// diag(N, N^T) with N the nilpotent Jordan matrix of type lambda.
FqMatrix nilpotent_representative(const SympCtx& ctx, const Partition& lambda);

std::uint64_t count_nilpotent(const SympCtx& ctx);
std::vector<Partition> partitions(int n);

// Complete flag V_0 in V_1 in ... in V_{2n} with V_{2n-i} = V_i^perp, stored
// as an adapted basis (V_i = span of the first i vectors) together with, for
// each i, rows spanning the annihilator of V_i.
struct SympFlag {
  std::vector<FqVector> basis;
  std::vector<FqMatrix> annihilator;
};

SympFlag complete_flag(const SympCtx& ctx, const std::vector<FqVector>& isotropic);
std::vector<SympFlag> enumerate_flags(const SympCtx& ctx, std::uint64_t max = 1u << 20);
SympFlag random_flag(const SympCtx& ctx, Rng& rng);
std::uint64_t flag_count_formula(std::uint64_t q, int n);

// T V_i in V_i for every i.
bool stabilizes(const SympCtx& ctx, const FqMatrix& T, const SympFlag& flag);
// T V_i in V_{i-1} for every i >= 1.
bool lowers(const SympCtx& ctx, const FqMatrix& T, const SympFlag& flag);
std::uint64_t flags_fixed(const SympCtx& ctx, const FqMatrix& T, const std::vector<SympFlag>& flags);

// Bases of E^{V_*} and E_0^{V_*} as solution spaces.
std::vector<FqMatrix> stabilizer_space(const SympCtx& ctx, const SympFlag& flag);
std::vector<FqMatrix> nil_stabilizer_space(const SympCtx& ctx, const SympFlag& flag);

Outcome verify_13a(const SympCtx& ctx, const SympFlag& flag);

// sum_{T' nilpotent} psi(tr T T') k(T') = c k(T) for every tested T, with c
// read off at T = 0 and asserted equal to q^{n^2 - n}.
Outcome verify_13b(const SympCtx& ctx, const VerifyOptions& opts = {});

// Products of random symplectic transvections x -> x + a <v, x> v.
FqMatrix random_symplectic(const SympCtx& ctx, Rng& rng);
FqMatrix conjugate(const SympCtx& ctx, const FqMatrix& g, const FqMatrix& T);

// Number of elements of each nilpotent pair type, by exhaustive scan of E.
std::map<Partition, std::uint64_t> nilpotent_census(const SympCtx& ctx);
// Pair types occurring in E_0^{V_*} for one flag (every nilpotent orbit
// meets it), by exhaustive scan of that n^2 - n dimensional space.
std::map<Partition, std::uint64_t> flag_nilpotent_types(const SympCtx& ctx, const SympFlag& flag);

}  // namespace symspace::sympair
