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

#include "symspace/quadspace.hpp"

#include <optional>
#include <set>

#include "symspace/errors.hpp"
#include "symspace/fields.hpp"
#include "symspace/linalg.hpp"
#include "symspace/parallel.hpp"
#include "symspace/random.hpp"

namespace symspace::quadspace {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked::mul(r, b);
  return r;
}

void require_odd(const gf::FieldCtx& field) {
  if (field.p() == 2) throw UnsupportedCharacteristic("quadratic spaces need odd characteristic");
}

gf::FqElem least_nonsquare(const gf::FieldCtx& field) {
  for (std::uint32_t c = 1; c < field.q(); ++c)
    if (field.quad_char({c}) == -1) return {c};
  throw DomainError("no nonsquare found");
}

gf::FqElem quad_value(const gf::FieldCtx& field, const FqMatrix& gram, std::span<const gf::FqElem> x) {
  return bilinear(field, gram, x, x);
}

}  // namespace

std::int64_t isotropic_closed_form(std::int64_t q, int M, int delta) {
  if (M < 1) throw DomainError("dimension must be positive");
  std::int64_t base = ipow(q, M - 1);
  if (M % 2 == 1) return base;
  return base + delta * (ipow(q, M / 2) - ipow(q, (M - 2) / 2));
}

std::uint64_t count_isotropic(const gf::FieldCtx& field, const FqMatrix& gram) {
  require_odd(field);
  CoordSpace space(field, static_cast<int>(gram.rows()));
  std::uint64_t count = 0;
  FqVector x(gram.rows());
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    space.decode(i, x);
    if (field.is_zero(quad_value(field, gram, x))) ++count;
  }
  return count;
}

int discriminant_type(const gf::FieldCtx& field, const FqMatrix& gram) {
  require_odd(field);
  const FqField F(field);
  if (gram.rows() != gram.cols() || gram.rows() == 0) throw DomainError("gram matrix must be square and nonempty");
  if (field.is_zero(linalg::determinant(F, gram))) throw DomainError("degenerate quadratic form");
  const int M = static_cast<int>(gram.rows());
  if (M % 2 == 1) return 0;
  const auto count = static_cast<std::int64_t>(count_isotropic(field, gram));
  const std::int64_t q = field.q();
  if (count == isotropic_closed_form(q, M, 1)) return 1;
  if (count == isotropic_closed_form(q, M, -1)) return -1;
  throw DomainError("isotropic count matches neither closed form");
}

QuadSpace make_quadspace(const gf::FieldCtx& field, FqMatrix gram) {
  require_odd(field);
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (gram(i, j) != gram(j, i)) throw DomainError("gram matrix must be symmetric");
  QuadSpace Q;
  Q.field = &field;
  Q.M = static_cast<int>(gram.rows());
  Q.delta = discriminant_type(field, gram);
  Q.gram = std::move(gram);
  return Q;
}

QuadSpace standard_quadspace(const gf::FieldCtx& field, int M, FormType type) {
  require_odd(field);
  if (M < 1) throw DomainError("dimension must be positive");
  const FqField F(field);
  const gf::FqElem nonsquare = least_nonsquare(field);
  auto build = [&](gf::FqElem c) {
    FqMatrix g = linalg::identity(F, static_cast<std::size_t>(M));
    g(M - 1, M - 1) = c;
    return make_quadspace(field, std::move(g));
  };
  if (M % 2 == 1) return build(type == FormType::split ? field.one() : nonsquare);
  QuadSpace first = build(field.one());
  const int wanted = type == FormType::split ? 1 : -1;
  return first.delta == wanted ? first : build(nonsquare);
}

FnTable f_ic(const QuadSpace& Q) {
  const auto& field = *Q.field;
  CoordSpace space(field, Q.M);
  const std::int64_t q = field.q();
  std::vector<std::int64_t> vals(space.size(), 0);
  FqVector x(static_cast<std::size_t>(Q.M));
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    space.decode(i, x);
    if (field.is_zero(quad_value(field, Q.gram, x))) vals[i] = 1;
  }
  vals[0] = Q.M % 2 == 0 ? 1 + Q.delta * ipow(q, (Q.M - 2) / 2) : 1;
  return FnTable::from_integers(field.p(), vals);
}

FnTable fourier(const QuadSpace& Q, const FnTable& f) { return fourier_transform(*Q.field, Q.gram, f); }

int zeta_sign(const QuadSpace& Q, std::span<const gf::FqElem> x) {
  const auto& field = *Q.field;
  const FqField F(field);
  if (Q.M % 2 == 0) throw DomainError("zeta_sign needs odd M");
  if (field.is_zero(quad_value(field, Q.gram, x))) throw DomainError("zeta_sign needs an anisotropic vector");
  if (Q.M == 1) return 1;
  // x^perp = kernel of the row vector x^T gram
  FqMatrix row = linalg::zeros(F, 1, static_cast<std::size_t>(Q.M));
  for (int j = 0; j < Q.M; ++j)
    for (int i = 0; i < Q.M; ++i) row(0, j) = field.add(row(0, j), field.mul(x[i], Q.gram(i, j)));
  auto basis = linalg::nullspace(F, row);
  const std::size_t m = basis.size();
  FqMatrix restricted = linalg::zeros(F, m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) restricted(a, b) = bilinear(field, Q.gram, basis[a], basis[b]);
  return discriminant_type(field, restricted);
}

Outcome verify_transform(const QuadSpace& Q, const VerifyOptions& opts) {
  const auto& field = *Q.field;
  const int p = field.p();
  const std::int64_t q = field.q();
  CoordSpace space(field, Q.M);
  FnTable f = f_ic(Q);
  if (opts.inject_fault) f.values[space.size() - 1] += CycNum::from_int(p, 1);

  Outcome out;
  bool exhaustive = opts.mode == Mode::exhaustive ||
                    (opts.mode == Mode::automatic && space.size() <= 1'000'000);
  out.sampled = !exhaustive;

  std::vector<std::uint64_t> targets;
  std::optional<FnTable> full;
  if (exhaustive) {
    full = fourier(Q, f);
    targets.resize(space.size());
    for (std::uint64_t i = 0; i < space.size(); ++i) targets[i] = i;
  } else {
    Rng rng(opts.seed);
    std::set<std::uint64_t> picked{0};
    while (picked.size() < std::min<std::uint64_t>(opts.samples, space.size())) picked.insert(rng.below(space.size()));
    targets.assign(picked.begin(), picked.end());
  }
  std::vector<CycNum> S(targets.size());
  if (full) {
    for (std::size_t t = 0; t < targets.size(); ++t) S[t] = (*full)[targets[t]];
  } else {
    parallel_for(targets.size(), [&](std::size_t t) {
      S[t] = character_sum_at(field, Q.gram, f, space.vector(targets[t]));
    });
  }

  FqVector x(static_cast<std::size_t>(Q.M));
  auto where = [&](std::uint64_t idx) { return "x#" + std::to_string(idx); };

  if (Q.M % 2 == 0) {
    const std::int64_t scale = ipow(q, Q.M / 2);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      CycNum expected = f[targets[t]].scaled(scale);
      out.expect(S[t] == expected, where(targets[t]), expected.to_string(), S[t].to_string());
    }
    out.fact("scale", std::to_string(scale));
    // Sign relating S(0) to q^{M/2} f(0), reported whenever f(0) is nonzero.
    const CycNum& f0 = f[0];
    if (!f0.is_zero()) {
      std::string sign = S[0] == f0.scaled(scale) ? "+1" : S[0] == f0.scaled(-scale) ? "-1" : "none";
      out.fact("origin_sign", sign);
    }
    return out;
  }

  // Odd M: the anisotropic values are zeta(x) G, with G read off at the first
  // enumerated anisotropic x whose perpendicular is split.
  std::optional<CycNum> G;
  for (std::uint64_t idx = 1; idx < space.size() && !G; ++idx) {
    space.decode(idx, x);
    if (field.is_zero(quad_value(field, Q.gram, x)) || zeta_sign(Q, x) != 1) continue;
    G = full ? (*full)[idx] : character_sum_at(field, Q.gram, f, x);
    out.fact("G_anchor", where(idx));
  }
  if (!G) throw DomainError("no anisotropic vector with split perpendicular");
  const std::int64_t norm_expected = ipow(q, Q.M - 1);
  CycNum norm = G->norm_squared();
  out.expect(norm == CycNum::from_int(p, norm_expected), "G*conj(G)", std::to_string(norm_expected), norm.to_string());
  out.fact("G", G->to_string());

  std::uint64_t plus = 0, minus = 0;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const std::uint64_t idx = targets[t];
    space.decode(idx, x);
    const CycNum& got = S[t];
    if (idx == 0) {
      CycNum expected = CycNum::from_int(p, ipow(q, Q.M - 1));
      out.expect(got == expected, where(idx), expected.to_string(), got.to_string());
    } else if (field.is_zero(quad_value(field, Q.gram, x))) {
      out.expect(got.is_zero(), where(idx), "0", got.to_string());
    } else {
      int z = zeta_sign(Q, x);
      (z == 1 ? plus : minus)++;
      CycNum expected = z == 1 ? *G : -*G;
      out.expect(got == expected, where(idx), expected.to_string(), got.to_string());
    }
  }
  out.fact("zeta_plus", std::to_string(plus));
  out.fact("zeta_minus", std::to_string(minus));
  return out;
}

}  // namespace symspace::quadspace
