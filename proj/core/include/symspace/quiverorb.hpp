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

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "symspace/errors.hpp"
#include "symspace/fields.hpp"
#include "symspace/gf.hpp"
#include "symspace/linalg.hpp"
#include "symspace/random.hpp"

namespace symspace::quiverorb {

// Graded Jordan block of size m whose top lies in V' (r = +1) or V'' (r = -1).
struct Block {
  int r = 1;
  int m = 1;
  friend bool operator==(const Block&, const Block&) = default;
  // Canonical order: larger blocks first, r = +1 before r = -1.
  friend std::strong_ordering operator<=>(const Block& a, const Block& b) {
    if (a.m != b.m) return b.m <=> a.m;
    return b.r <=> a.r;
  }
};

// (N', N'') contributed by one block.
std::pair<int, int> g_vec(int r, int m);

struct Signature {
  int n1 = 0;
  int n2 = 0;
  std::map<Block, int> mults;

  int count(int r, int m) const;
  std::vector<Block> blocks() const;  // with repetition, canonical order
  std::string to_string() const;
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

Signature make_signature(int n1, int n2, const std::vector<Block>& blocks);
std::vector<Signature> enumerate_signatures(int n1, int n2);
// sigma(1, m) = 0 or sigma(-1, m) = 0 for every m.
bool is_fthin(const Signature& s);

// A : V' -> V'' (n2 x n1), B : V'' -> V' (n1 x n2).
template <class F>
struct PairNM {
  linalg::Mat<F> A;
  linalg::Mat<F> B;
  int n1() const { return static_cast<int>(A.cols()); }
  int n2() const { return static_cast<int>(A.rows()); }
};

// T(x', x'') = (B x'', A x') on V' + V'', V' coordinates first.
template <class F>
linalg::Mat<F> combined(const F& f, const PairNM<F>& x) {
  const std::size_t n1 = x.A.cols(), n2 = x.A.rows();
  auto T = linalg::zeros(f, n1 + n2, n1 + n2);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n1; ++j) T(n1 + i, j) = x.A(i, j);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) T(i, n1 + j) = x.B(i, j);
  return T;
}

template <class F>
struct GradedChain {
  int r = 1;
  std::vector<linalg::Vec<F>> vectors;  // top, T top, ..., T^{m-1} top
};

// Graded Jordan chains of the nilpotent T, from the largest size down. Tops of
// size-m chains are homogeneous vectors of ker T^m independent modulo
// ker T^{m-1} + T ker T^{m+1}, taken from V' first, then V''.
template <class F>
std::vector<GradedChain<F>> graded_chains(const F& f, const PairNM<F>& x) {
  const auto T = combined(f, x);
  const std::size_t n1 = x.A.cols(), d = T.rows();
  if (!linalg::is_nilpotent(f, T)) throw DomainError("pair is not nilpotent");
  std::vector<linalg::Mat<F>> powers{linalg::identity(f, d)};
  while (!linalg::is_zero(f, powers.back())) powers.push_back(linalg::multiply(f, powers.back(), T));
  const std::size_t h = powers.size() - 1;  // nilpotency index
  auto kernel = [&](std::size_t j) { return linalg::nullspace(f, powers[std::min(j, h)]); };
  // Vectors supported on one graded piece killed by T^m.
  auto graded_kernel = [&](std::size_t m, bool first) {
    const std::size_t lo = first ? 0 : n1, hi = first ? n1 : d;
    auto sub = linalg::zeros(f, d, hi - lo);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = lo; j < hi; ++j) sub(i, j - lo) = powers[std::min(m, h)](i, j);
    std::vector<linalg::Vec<F>> out;
    for (const auto& v : linalg::nullspace(f, sub)) {
      linalg::Vec<F> w(d, f.zero());
      for (std::size_t j = lo; j < hi; ++j) w[j] = v[j - lo];
      out.push_back(std::move(w));
    }
    return out;
  };

  std::vector<GradedChain<F>> chains;
  for (std::size_t m = h; m >= 1; --m) {
    std::vector<linalg::Vec<F>> cur = kernel(m - 1);
    for (const auto& v : kernel(m + 1)) cur.push_back(linalg::apply(f, T, v));
    cur = linalg::span_basis(f, cur, d);
    for (bool first : {true, false}) {
      for (const auto& w : graded_kernel(m, first)) {
        if (linalg::in_span(f, cur, w)) continue;
        cur.push_back(w);
        GradedChain<F> c;
        c.r = first ? 1 : -1;
        c.vectors.push_back(w);
        for (std::size_t k = 1; k < m; ++k) c.vectors.push_back(linalg::apply(f, T, c.vectors.back()));
        chains.push_back(std::move(c));
      }
    }
  }
  std::vector<linalg::Vec<F>> all;
  for (const auto& c : chains) all.insert(all.end(), c.vectors.begin(), c.vectors.end());
  if (all.size() != d || linalg::span_basis(f, all, d).size() != d)
    throw std::logic_error("graded chains do not form a basis");
  return chains;
}

template <class F>
Signature classify_pair(const F& f, const PairNM<F>& x) {
  std::vector<Block> blocks;
  for (const auto& c : graded_chains(f, x)) blocks.push_back({c.r, static_cast<int>(c.vectors.size())});
  return make_signature(x.n1(), x.n2(), blocks);
}

// Blocks laid out in canonical order; each chain alternates between the next
// free basis vectors of V' and V'', so A and B are 0/1 matrices.
template <class F>
PairNM<F> canonical_representative(const F& f, const Signature& s) {
  PairNM<F> x{linalg::zeros(f, s.n2, s.n1), linalg::zeros(f, s.n1, s.n2)};
  int next1 = 0, next2 = 0;
  for (const auto& b : s.blocks()) {
    bool in_first = b.r == 1;
    int prev = in_first ? next1++ : next2++;
    for (int k = 1; k < b.m; ++k) {
      in_first = !in_first;
      const int cur = in_first ? next1++ : next2++;
      if (in_first)
        x.B(cur, prev) = f.one();  // V'' -> V'
      else
        x.A(cur, prev) = f.one();  // V' -> V''
      prev = cur;
    }
  }
  if (next1 != s.n1 || next2 != s.n2) throw DomainError("signature does not match its dimensions");
  return x;
}

// The ten tabulated orbit representatives N_1..N_10 for dims (2,2), with
// V' = span(e1, e2) and V'' = span(e3, e4).
template <class F>
PairNM<F> gl22_representative(const F& f, int i) {
  // images[j] = k means e_{j+1} -> e_k, 0 means e_{j+1} -> 0
  static constexpr int table[10][4] = {
      {4, 3, 0, 2}, {0, 4, 2, 1}, {4, 0, 0, 2}, {0, 4, 0, 1}, {4, 3, 0, 0},
      {0, 0, 2, 1}, {4, 0, 2, 0}, {4, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0},
  };
  if (i < 1 || i > 10) throw DomainError("representative index must be in [1, 10]");
  PairNM<F> x{linalg::zeros(f, 2, 2), linalg::zeros(f, 2, 2)};
  for (int j = 0; j < 4; ++j) {
    const int k = table[i - 1][j] - 1;
    if (k < 0) continue;
    if (j < 2 && k >= 2)
      x.A(k - 2, j) = f.one();
    else if (j >= 2 && k < 2)
      x.B(k, j - 2) = f.one();
    else
      throw std::logic_error("representative table is not graded");
  }
  return x;
}

// (h A g^-1, g B h^-1) with g in GL(V'), h in GL(V'').
template <class F>
PairNM<F> act(const F& f, const linalg::Mat<F>& g, const linalg::Mat<F>& h, const PairNM<F>& x) {
  auto gi = linalg::inverse(f, g);
  auto hi = linalg::inverse(f, h);
  if (!gi || !hi) throw DomainError("group element is singular");
  return {linalg::multiply(f, linalg::multiply(f, h, x.A), *gi), linalg::multiply(f, linalg::multiply(f, g, x.B), *hi)};
}

linalg::Mat<FqField> random_gl(const gf::FieldCtx& field, int n, Rng& rng);

// N'^2 + N''^2 minus the dimension of {(X, Y) : Y A = A X, X B = B Y} at the
// canonical representative, over the rationals.
int orbit_dim(const Signature& s);

// Exhaustive classification of all nilpotent pairs over F_q.
std::map<Signature, std::uint64_t> orbit_census(const gf::FieldCtx& field, int n1, int n2,
                                                std::uint64_t max = 1u << 22);
std::uint64_t count_orbit_points(const Signature& s, const gf::FieldCtx& field);
// |{(g, h) : (h A g^-1, g B h^-1) = (A, B)}| by exhaustive search.
std::uint64_t stabilizer_order(const gf::FieldCtx& field, const PairNM<FqField>& x, std::uint64_t max = 1u << 22);
std::uint64_t gl_order(std::uint64_t q, int n);

// Dimension of the orbit of a nonzero isotropic vector under SO(U), dim U = M,
// from the stabilizer in the Lie algebra, over the rationals.
int so_orbit_dim(int M);

}  // namespace symspace::quiverorb
