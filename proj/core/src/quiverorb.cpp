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

#include "symspace/quiverorb.hpp"

#include <functional>

#include "symspace/fnspace.hpp"

namespace symspace::quiverorb {

std::pair<int, int> g_vec(int r, int m) {
  if ((r != 1 && r != -1) || m < 1) throw DomainError("block needs r = +-1 and m >= 1");
  if (m % 2 == 0) return {m / 2, m / 2};
  return {(m + r) / 2, (m - r) / 2};
}

int Signature::count(int r, int m) const {
  auto it = mults.find({r, m});
  return it == mults.end() ? 0 : it->second;
}

std::vector<Block> Signature::blocks() const {
  std::vector<Block> out;
  for (const auto& [b, k] : mults)
    for (int i = 0; i < k; ++i) out.push_back(b);
  return out;
}

std::string Signature::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [b, k] : mults) {
    s += (first ? "" : ",") + std::string("(") + std::to_string(b.r) + "," + std::to_string(b.m) + "):" +
         std::to_string(k);
    first = false;
  }
  return s + "}";
}

Signature make_signature(int n1, int n2, const std::vector<Block>& blocks) {
  Signature s{n1, n2, {}};
  int d1 = 0, d2 = 0;
  for (const auto& b : blocks) {
    auto [a, c] = g_vec(b.r, b.m);
    d1 += a;
    d2 += c;
    ++s.mults[b];
  }
  if (d1 != n1 || d2 != n2) throw DomainError("blocks do not add up to the dimensions");
  return s;
}

std::vector<Signature> enumerate_signatures(int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw DomainError("dimensions must be nonnegative");
  std::vector<Block> kinds;
  for (int m = n1 + n2; m >= 1; --m) {
    kinds.push_back({1, m});
    kinds.push_back({-1, m});
  }
  std::vector<Signature> out;
  std::vector<Block> cur;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int left1, int left2) {
    if (left1 == 0 && left2 == 0) {
      out.push_back(make_signature(n1, n2, cur));
      return;
    }
    if (k == kinds.size()) return;
    rec(k + 1, left1, left2);
    auto [a, c] = g_vec(kinds[k].r, kinds[k].m);
    int used = 0;
    while (a * (used + 1) <= left1 && c * (used + 1) <= left2) {
      ++used;
      cur.push_back(kinds[k]);
      rec(k + 1, left1 - a * used, left2 - c * used);
    }
    for (int i = 0; i < used; ++i) cur.pop_back();
  };
  rec(0, n1, n2);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_fthin(const Signature& s) {
  for (const auto& [b, k] : s.mults)
    if (k > 0 && s.count(-b.r, b.m) > 0) return false;
  return true;
}

linalg::Mat<FqField> random_gl(const gf::FieldCtx& field, int n, Rng& rng) {
  const FqField f(field);
  for (;;) {
    auto g = linalg::zeros(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = field.element(static_cast<std::uint32_t>(rng.below(field.q())));
    if (!field.is_zero(linalg::determinant(f, g))) return g;
  }
}

int orbit_dim(const Signature& s) {
  const RationalField f;
  const auto x = canonical_representative(f, s);
  const int n1 = s.n1, n2 = s.n2;
  const int unknowns = n1 * n1 + n2 * n2;
  auto X = [&](int i, int j) { return i * n1 + j; };
  auto Y = [&](int i, int j) { return n1 * n1 + i * n2 + j; };
  std::vector<linalg::Vec<RationalField>> rows;
  // (Y A - A X)_{ij}, i < n2, j < n1
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n1; ++j) {
      linalg::Vec<RationalField> r(unknowns, 0);
      for (int k = 0; k < n2; ++k) r[Y(i, k)] += x.A(k, j);
      for (int k = 0; k < n1; ++k) r[X(k, j)] -= x.A(i, k);
      rows.push_back(std::move(r));
    }
  // (X B - B Y)_{ij}, i < n1, j < n2
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      linalg::Vec<RationalField> r(unknowns, 0);
      for (int k = 0; k < n1; ++k) r[X(i, k)] += x.B(k, j);
      for (int k = 0; k < n2; ++k) r[Y(k, j)] -= x.B(i, k);
      rows.push_back(std::move(r));
    }
  if (rows.empty()) return 0;
  const auto stab = linalg::nullspace(f, linalg::from_rows(f, rows, static_cast<std::size_t>(unknowns)));
  return unknowns - static_cast<int>(stab.size());
}

std::map<Signature, std::uint64_t> orbit_census(const gf::FieldCtx& field, int n1, int n2, std::uint64_t max) {
  const FqField f(field);
  CoordSpace space(field, 2 * n1 * n2, max);
  std::map<Signature, std::uint64_t> out;
  FqVector c(static_cast<std::size_t>(2 * n1 * n2));
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    space.decode(i, c);
    PairNM<FqField> x{linalg::zeros(f, n2, n1), linalg::zeros(f, n1, n2)};
    std::size_t k = 0;
    for (int a = 0; a < n2; ++a)
      for (int b = 0; b < n1; ++b) x.A(a, b) = c[k++];
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n2; ++b) x.B(a, b) = c[k++];
    if (!linalg::is_nilpotent(f, combined(f, x))) continue;
    ++out[classify_pair(f, x)];
  }
  return out;
}

std::uint64_t count_orbit_points(const Signature& s, const gf::FieldCtx& field) {
  const auto census = orbit_census(field, s.n1, s.n2);
  auto it = census.find(s);
  return it == census.end() ? 0 : it->second;
}

std::uint64_t gl_order(std::uint64_t q, int n) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  std::uint64_t r = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    r *= qn - qi;
    qi *= q;
  }
  return r;
}

std::uint64_t stabilizer_order(const gf::FieldCtx& field, const PairNM<FqField>& x, std::uint64_t max) {
  const FqField f(field);
  const int n1 = x.n1(), n2 = x.n2();
  auto all_gl = [&](int n) {
    std::vector<linalg::Mat<FqField>> out;
    CoordSpace space(field, n * n, max);
    FqVector c(static_cast<std::size_t>(n * n));
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      space.decode(i, c);
      auto g = linalg::zeros(f, n, n);
      for (int a = 0; a < n * n; ++a) g(a / n, a % n) = c[a];
      if (!field.is_zero(linalg::determinant(f, g))) out.push_back(std::move(g));
    }
    return out;
  };
  const auto G1 = all_gl(n1), G2 = all_gl(n2);
  if (static_cast<double>(G1.size()) * static_cast<double>(G2.size()) > static_cast<double>(max))
    throw BudgetExceeded("stabilizer search exceeds budget");
  // (h A g^-1, g B h^-1) = (A, B)  <=>  h A = A g and g B = B h
  std::uint64_t count = 0;
  for (const auto& g : G1)
    for (const auto& h : G2)
      if (linalg::multiply(f, h, x.A) == linalg::multiply(f, x.A, g) &&
          linalg::multiply(f, g, x.B) == linalg::multiply(f, x.B, h))
        ++count;
  return count;
}

int so_orbit_dim(int M) {
  if (M < 2) throw DomainError("a nonzero isotropic vector needs M >= 2");
  const RationalField f;
  // gram diag(1, ..., 1, -1) and x = e_1 + e_M
  std::vector<Rational> gdiag(M, 1);
  gdiag[M - 1] = -1;
  auto idx = [&](int i, int j) { return i * M + j; };
  std::vector<linalg::Vec<RationalField>> so_rows;
  // X^T G + G X = 0: G_ii X_ij + G_jj X_ji = 0 (diagonal G)
  for (int i = 0; i < M; ++i)
    for (int j = i; j < M; ++j) {
      linalg::Vec<RationalField> r(M * M, 0);
      r[idx(i, j)] += gdiag[i];
      r[idx(j, i)] += gdiag[j];
      so_rows.push_back(std::move(r));
    }
  const auto so = linalg::nullspace(f, linalg::from_rows(f, so_rows, static_cast<std::size_t>(M * M)));
  auto stab_rows = so_rows;
  for (int i = 0; i < M; ++i) {
    linalg::Vec<RationalField> r(M * M, 0);
    r[idx(i, 0)] = 1;
    r[idx(i, M - 1)] = 1;
    stab_rows.push_back(std::move(r));
  }
  const auto stab = linalg::nullspace(f, linalg::from_rows(f, stab_rows, static_cast<std::size_t>(M * M)));
  return static_cast<int>(so.size() - stab.size());
}

}  // namespace symspace::quiverorb
