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

#include "symspace/sympair.hpp"

#include <algorithm>
#include <functional>

#include "symspace/errors.hpp"
#include "symspace/fields.hpp"
#include "symspace/linalg.hpp"
#include "symspace/parallel.hpp"

namespace symspace::sympair {

using gf::FieldCtx;
using gf::FqElem;

namespace {

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) {
    if (r > UINT64_MAX / b) throw BudgetExceeded("power overflows");
    r *= b;
  }
  return r;
}

FqVector mat_vec(const FieldCtx& F, const FqMatrix& m, std::span<const FqElem> v) {
  FqVector out(m.rows(), F.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j].code) out[i] = F.add(out[i], F.mul(m(i, j), v[j]));
  return out;
}

bool annihilated(const FieldCtx& F, const FqMatrix& ann, std::span<const FqElem> v) {
  for (std::size_t r = 0; r < ann.rows(); ++r) {
    FqElem s = F.zero();
    for (std::size_t j = 0; j < ann.cols(); ++j) s = F.add(s, F.mul(ann(r, j), v[j]));
    if (!F.is_zero(s)) return false;
  }
  return true;
}

FqMatrix annihilator_of(const FieldCtx& F, const std::vector<FqVector>& vecs, std::size_t dim) {
  const FqField FF(F);
  if (vecs.empty()) return linalg::identity(FF, dim);
  auto ker = linalg::nullspace(FF, linalg::from_rows(FF, vecs, dim));
  if (ker.empty()) return FqMatrix(0, dim, F.zero());
  return linalg::from_rows(FF, ker, dim);
}

// Row vector x^T omega, i.e. the functional <x, .>.
FqVector form_row(const SympCtx& ctx, std::span<const FqElem> x) {
  const auto& F = ctx.field();
  const auto& w = ctx.omega();
  FqVector r(w.cols(), F.zero());
  for (std::size_t i = 0; i < w.rows(); ++i)
    if (x[i].code)
      for (std::size_t j = 0; j < w.cols(); ++j) r[j] = F.add(r[j], F.mul(x[i], w(i, j)));
  return r;
}

// Basis of {x : <x, v> = 0 for all v in vecs}.
std::vector<FqVector> perp(const SympCtx& ctx, const std::vector<FqVector>& vecs) {
  const FqField FF(ctx.field());
  const auto d = static_cast<std::size_t>(ctx.dim_V());
  if (vecs.empty()) {
    std::vector<FqVector> all;
    auto I = linalg::identity(FF, d);
    for (std::size_t i = 0; i < d; ++i) all.emplace_back(I.row(i).begin(), I.row(i).end());
    return all;
  }
  // <x, v> = x^T omega v: rows are (omega v)^T.
  std::vector<FqVector> rows;
  for (const auto& v : vecs) rows.push_back(mat_vec(ctx.field(), ctx.omega(), v));
  return linalg::nullspace(FF, linalg::from_rows(FF, rows, d));
}

// One representative per projective point of span(complement), normalized so
// the leading coefficient is 1.
std::vector<FqVector> quotient_lines(const FieldCtx& F, const std::vector<FqVector>& complement) {
  const std::size_t m = complement.size();
  std::vector<FqVector> out;
  if (m == 0) return out;
  const std::size_t d = complement[0].size();
  for (std::size_t lead = 0; lead < m; ++lead) {
    const std::uint64_t tail = upow(F.q(), static_cast<int>(m - lead - 1));
    for (std::uint64_t t = 0; t < tail; ++t) {
      std::uint64_t rest = t;
      FqVector v(d, F.zero());
      for (std::size_t j = 0; j < d; ++j) v[j] = complement[lead][j];
      for (std::size_t k = m; k-- > lead + 1;) {
        const FqElem a = F.element(static_cast<std::uint32_t>(rest % F.q()));
        rest /= F.q();
        if (a.code)
          for (std::size_t j = 0; j < d; ++j) v[j] = F.add(v[j], F.mul(a, complement[k][j]));
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

// Vectors of `big` completing `small` to a basis of span(big).
std::vector<FqVector> complement_in(const FieldCtx& F, const std::vector<FqVector>& small,
                                    const std::vector<FqVector>& big) {
  const FqField FF(F);
  std::vector<FqVector> cur = small, out;
  for (const auto& v : big) {
    if (linalg::in_span(FF, cur, v)) continue;
    cur.push_back(v);
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<FqMatrix> basis_of_E(const FieldCtx& F, const FqMatrix& omega) {
  const FqField FF(F);
  const std::size_t d = omega.rows();
  // unknowns T_{ab}, index a*d+b; conditions on S = omega T:
  // S_ii = 0 and S_ij + S_ji = 0 for i < j.
  std::vector<FqVector> rows;
  auto S_row = [&](std::size_t i, std::size_t j) {
    FqVector r(d * d, F.zero());
    for (std::size_t k = 0; k < d; ++k) r[k * d + j] = omega(i, k);
    return r;
  };
  for (std::size_t i = 0; i < d; ++i) {
    rows.push_back(S_row(i, i));
    for (std::size_t j = i + 1; j < d; ++j) {
      FqVector r = S_row(i, j);
      FqVector s = S_row(j, i);
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = F.add(r[k], s[k]);
      rows.push_back(std::move(r));
    }
  }
  auto sols = linalg::nullspace(FF, linalg::from_rows(FF, rows, d * d));
  std::vector<FqMatrix> out;
  for (const auto& s : sols) {
    FqMatrix T(d, d, F.zero());
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) T(a, b) = s[a * d + b];
    out.push_back(std::move(T));
  }
  return out;
}

SympCtx::SympCtx(const FieldCtx& field, int n) : field_(&field), n_(n), omega_(2 * n, 2 * n, field.zero()) {
  if (n < 1) throw DomainError("n must be positive");
  for (int i = 0; i < n; ++i) {
    omega_(i, n + i) = field.one();
    omega_(n + i, i) = field.neg(field.one());
  }
  basis_ = basis_of_E(field, omega_);
  if (dim_E() != 2 * n * n - n) throw DomainError("self-adjoint space has unexpected dimension");
}

FqElem SympCtx::form(std::span<const FqElem> x, std::span<const FqElem> y) const {
  return bilinear(*field_, omega_, x, y);
}

bool SympCtx::is_self_adjoint(const FqMatrix& T) const {
  const FqField FF(*field_);
  const FqMatrix S = linalg::multiply(FF, omega_, T);
  for (std::size_t i = 0; i < S.rows(); ++i) {
    if (!field_->is_zero(S(i, i))) return false;
    for (std::size_t j = i + 1; j < S.cols(); ++j)
      if (!field_->is_zero(field_->add(S(i, j), S(j, i)))) return false;
  }
  return true;
}

FqMatrix SympCtx::element(std::span<const FqElem> coords) const {
  const auto d = static_cast<std::size_t>(dim_V());
  FqMatrix T(d, d, field_->zero());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (!coords[k].code) continue;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (basis_[k](a, b).code) T(a, b) = field_->add(T(a, b), field_->mul(coords[k], basis_[k](a, b)));
  }
  return T;
}

std::vector<FqMatrix> SympCtx::all_elements(std::uint64_t max) const {
  CoordSpace space(*field_, dim_E(), max);
  std::vector<FqMatrix> out;
  out.reserve(space.size());
  FqVector c(static_cast<std::size_t>(dim_E()));
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    space.decode(i, c);
    out.push_back(element(c));
  }
  return out;
}

FqElem trace_pairing(const FieldCtx& F, const FqMatrix& T, const FqMatrix& U) {
  FqElem s = F.zero();
  for (std::size_t i = 0; i < T.rows(); ++i)
    for (std::size_t j = 0; j < T.cols(); ++j)
      if (T(i, j).code && U(j, i).code) s = F.add(s, F.mul(T(i, j), U(j, i)));
  return s;
}

Partition jordan_type(const FieldCtx& F, const FqMatrix& T) {
  const FqField FF(F);
  const std::size_t d = T.rows();
  if (!linalg::is_nilpotent(FF, T)) throw DomainError("matrix is not nilpotent");
  // ker_k = dim ker T^k; blocks of size >= k number ker_k - ker_{k-1}.
  std::vector<std::size_t> ker{0};
  FqMatrix P = linalg::identity(FF, d);
  while (ker.back() < d) {
    P = linalg::multiply(FF, P, T);
    ker.push_back(d - linalg::rank(FF, P));
  }
  Partition parts;
  for (std::size_t k = 1; k < ker.size(); ++k) {
    const std::size_t at_least_k = ker[k] - ker[k - 1];
    const std::size_t at_least_k1 = k + 1 < ker.size() ? ker[k + 1] - ker[k] : 0;
    for (std::size_t m = 0; m < at_least_k - at_least_k1; ++m) parts.push_back(static_cast<int>(k));
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

Partition jordan_pair_type(const SympCtx& ctx, const FqMatrix& T) {
  Partition full = jordan_type(ctx.field(), T);
  Partition half;
  for (std::size_t i = 0; i < full.size(); i += 2) {
    if (i + 1 >= full.size() || full[i] != full[i + 1])
      throw DomainError("Jordan type of a self-adjoint nilpotent has a part of odd multiplicity");
    half.push_back(full[i]);
  }
  return half;
}

FqMatrix nilpotent_representative(const SympCtx& ctx, const Partition& lambda) {
  const auto& F = ctx.field();
  const int n = ctx.n();
  int total = 0;
  for (int part : lambda) total += part;
  if (total != n) throw DomainError("partition size must equal n");
  FqMatrix T(2 * n, 2 * n, F.zero());
  int start = 0;
  for (int part : lambda) {
    for (int i = 0; i + 1 < part; ++i) {
      T(start + i, start + i + 1) = F.one();          // N
      T(n + start + i + 1, n + start + i) = F.one();  // N^T
    }
    start += part;
  }
  return T;
}

std::uint64_t count_nilpotent(const SympCtx& ctx) {
  const FqField FF(ctx.field());
  CoordSpace space(ctx.field(), ctx.dim_E(), 1u << 24);
  std::vector<std::uint64_t> hits(space.size(), 0);
  parallel_for(space.size(), [&](std::size_t i) {
    FqVector c = space.vector(i);
    hits[i] = linalg::is_nilpotent(FF, ctx.element(c)) ? 1 : 0;
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  return total;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

SympFlag complete_flag(const SympCtx& ctx, const std::vector<FqVector>& isotropic) {
  const auto& F = ctx.field();
  const FqField FF(F);
  const int n = ctx.n();
  const auto d = static_cast<std::size_t>(ctx.dim_V());
  if (static_cast<int>(isotropic.size()) != n) throw DomainError("need n vectors spanning a Lagrangian");
  for (std::size_t i = 0; i < isotropic.size(); ++i)
    for (std::size_t j = 0; j < isotropic.size(); ++j)
      if (!F.is_zero(ctx.form(isotropic[i], isotropic[j]))) throw DomainError("vectors are not isotropic");
  if (linalg::span_basis(FF, isotropic, d).size() != isotropic.size()) throw DomainError("vectors are dependent");
  SympFlag flag;
  flag.basis = isotropic;
  // V_{n+j} = V_{n-j}^perp; extend the adapted basis step by step.
  for (int j = 1; j <= n; ++j) {
    std::vector<FqVector> inner(isotropic.begin(), isotropic.begin() + (n - j));
    auto ext = complement_in(F, flag.basis, perp(ctx, inner));
    if (ext.size() != 1) throw DomainError("flag completion failed");
    flag.basis.push_back(ext[0]);
  }
  for (std::size_t i = 0; i <= d; ++i) {
    std::vector<FqVector> first(flag.basis.begin(), flag.basis.begin() + static_cast<std::ptrdiff_t>(i));
    flag.annihilator.push_back(annihilator_of(F, first, d));
  }
  return flag;
}

std::uint64_t flag_count_formula(std::uint64_t q, int n) {
  std::uint64_t r = 1;
  for (int i = 1; i <= n; ++i) r *= (upow(q, 2 * i) - 1) / (q - 1);
  return r;
}

std::vector<SympFlag> enumerate_flags(const SympCtx& ctx, std::uint64_t max) {
  const auto& F = ctx.field();
  const std::uint64_t expected = flag_count_formula(F.q(), ctx.n());
  if (expected > max) throw BudgetExceeded("flag enumeration exceeds budget");
  std::vector<SympFlag> out;
  out.reserve(expected);
  std::vector<FqVector> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == ctx.n()) {
      out.push_back(complete_flag(ctx, cur));
      return;
    }
    auto next = quotient_lines(F, complement_in(F, cur, perp(ctx, cur)));
    for (auto& v : next) {
      cur.push_back(std::move(v));
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

SympFlag random_flag(const SympCtx& ctx, Rng& rng) {
  const auto& F = ctx.field();
  std::vector<FqVector> cur;
  while (static_cast<int>(cur.size()) < ctx.n()) {
    auto comp = complement_in(F, cur, perp(ctx, cur));
    // uniform nonzero combination of the complement, i.e. a random line of W^perp / W
    FqVector v;
    bool nonzero = false;
    while (!nonzero) {
      v.assign(static_cast<std::size_t>(ctx.dim_V()), F.zero());
      for (const auto& c : comp) {
        const FqElem a = F.element(static_cast<std::uint32_t>(rng.below(F.q())));
        if (!a.code) continue;
        nonzero = true;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.add(v[j], F.mul(a, c[j]));
      }
    }
    cur.push_back(std::move(v));
  }
  return complete_flag(ctx, cur);
}

bool stabilizes(const SympCtx& ctx, const FqMatrix& T, const SympFlag& flag) {
  // T V_i in V_i for all i  <=>  T v_j in V_j for all j.
  for (std::size_t j = 1; j <= flag.basis.size(); ++j)
    if (!annihilated(ctx.field(), flag.annihilator[j], mat_vec(ctx.field(), T, flag.basis[j - 1]))) return false;
  return true;
}

bool lowers(const SympCtx& ctx, const FqMatrix& T, const SympFlag& flag) {
  for (std::size_t j = 1; j <= flag.basis.size(); ++j)
    if (!annihilated(ctx.field(), flag.annihilator[j - 1], mat_vec(ctx.field(), T, flag.basis[j - 1])))
      return false;
  return true;
}

std::uint64_t flags_fixed(const SympCtx& ctx, const FqMatrix& T, const std::vector<SympFlag>& flags) {
  std::uint64_t k = 0;
  for (const auto& fl : flags)
    if (stabilizes(ctx, T, fl)) ++k;
  return k;
}

namespace {

// Elements sum c_k B_k of E with ann_{j - shift} T v_j = 0 for all j.
std::vector<FqMatrix> flag_space(const SympCtx& ctx, const SympFlag& flag, std::size_t shift) {
  const auto& F = ctx.field();
  const FqField FF(F);
  const auto& B = ctx.basis();
  std::vector<FqVector> rows;
  for (std::size_t j = 1; j <= flag.basis.size(); ++j) {
    const FqMatrix& ann = flag.annihilator[j - shift];
    std::vector<FqVector> images;
    for (const auto& Bk : B) images.push_back(mat_vec(F, Bk, flag.basis[j - 1]));
    for (std::size_t r = 0; r < ann.rows(); ++r) {
      FqVector row(B.size(), F.zero());
      for (std::size_t k = 0; k < B.size(); ++k)
        for (std::size_t t = 0; t < ann.cols(); ++t) row[k] = F.add(row[k], F.mul(ann(r, t), images[k][t]));
      rows.push_back(std::move(row));
    }
  }
  std::vector<FqVector> sols =
      rows.empty() ? std::vector<FqVector>{} : linalg::nullspace(FF, linalg::from_rows(FF, rows, B.size()));
  if (rows.empty())
    for (std::size_t k = 0; k < B.size(); ++k) {
      FqVector e(B.size(), F.zero());
      e[k] = F.one();
      sols.push_back(e);
    }
  std::vector<FqMatrix> out;
  for (const auto& s : sols) out.push_back(ctx.element(s));
  return out;
}

}  // namespace

std::vector<FqMatrix> stabilizer_space(const SympCtx& ctx, const SympFlag& flag) { return flag_space(ctx, flag, 0); }

std::vector<FqMatrix> nil_stabilizer_space(const SympCtx& ctx, const SympFlag& flag) {
  return flag_space(ctx, flag, 1);
}

Outcome verify_13a(const SympCtx& ctx, const SympFlag& flag) {
  const auto& F = ctx.field();
  const FqField FF(F);
  const int n = ctx.n();
  Outcome out;
  auto Es = stabilizer_space(ctx, flag);
  auto E0s = nil_stabilizer_space(ctx, flag);
  out.expect(static_cast<int>(Es.size()) == n * n, "dim E^V", std::to_string(n * n), std::to_string(Es.size()));
  out.expect(static_cast<int>(E0s.size()) == n * n - n, "dim E0^V", std::to_string(n * n - n),
             std::to_string(E0s.size()));
  out.expect(static_cast<int>(Es.size() + E0s.size()) == ctx.dim_E(), "dim sum", std::to_string(ctx.dim_E()),
             std::to_string(Es.size() + E0s.size()));
  for (const auto& T : Es) out.expect(ctx.is_self_adjoint(T) && stabilizes(ctx, T, flag), "E^V member", "stable", "not");
  for (const auto& T : E0s)
    out.expect(ctx.is_self_adjoint(T) && lowers(ctx, T, flag) && linalg::is_nilpotent(FF, T), "E0^V member",
               "lowering", "not");
  for (std::size_t a = 0; a < Es.size(); ++a)
    for (std::size_t b = 0; b < E0s.size(); ++b) {
      const FqElem t = trace_pairing(F, Es[a], E0s[b]);
      out.expect(F.is_zero(t), "tr(T T') at (" + std::to_string(a) + "," + std::to_string(b) + ")", "0", F.format(t));
    }
  // The orthogonal of E0^V inside E, computed independently, has dimension n^2.
  std::vector<FqVector> rows;
  for (const auto& U : E0s) {
    FqVector r;
    for (const auto& Bk : ctx.basis()) r.push_back(trace_pairing(F, Bk, U));
    rows.push_back(std::move(r));
  }
  const std::size_t orth =
      rows.empty() ? ctx.basis().size() : linalg::nullspace(FF, linalg::from_rows(FF, rows, ctx.basis().size())).size();
  out.expect(orth == Es.size(), "dim orthogonal of E0^V", std::to_string(Es.size()), std::to_string(orth));
  out.fact("dim_E_V", std::to_string(Es.size()));
  out.fact("dim_E0_V", std::to_string(E0s.size()));
  return out;
}

Outcome verify_13b(const SympCtx& ctx, const VerifyOptions& opts) {
  const auto& F = ctx.field();
  if (F.p() == 2) throw UnsupportedCharacteristic("the transform identity needs odd characteristic");
  const FqField FF(F);
  const int p = F.p();
  const int n = ctx.n();
  const auto flags = enumerate_flags(ctx);
  const auto elems = ctx.all_elements();

  std::vector<FqMatrix> nil;
  std::vector<std::int64_t> k0;
  for (const auto& T : elems)
    if (linalg::is_nilpotent(FF, T)) {
      nil.push_back(T);
      k0.push_back(static_cast<std::int64_t>(flags_fixed(ctx, T, flags)));
    }
  if (opts.inject_fault) k0.back() += 1;

  Outcome out;
  std::vector<std::uint64_t> targets;
  const bool sampled = opts.mode == Mode::sampled || (opts.mode == Mode::automatic && elems.size() > 100'000);
  out.sampled = sampled;
  if (!sampled) {
    for (std::uint64_t i = 0; i < elems.size(); ++i) targets.push_back(i);
  } else {
    Rng rng(opts.seed);
    std::vector<bool> used(elems.size(), false);
    targets.push_back(0);
    used[0] = true;
    while (targets.size() < std::min<std::uint64_t>(std::max<std::uint64_t>(opts.samples, 10'000), elems.size())) {
      auto i = rng.below(elems.size());
      if (!used[i]) {
        used[i] = true;
        targets.push_back(i);
      }
    }
    std::sort(targets.begin(), targets.end());
  }

  std::vector<CycNum> lhs(targets.size());
  std::vector<std::int64_t> k(targets.size());
  parallel_for(targets.size(), [&](std::size_t t) {
    const FqMatrix& T = elems[targets[t]];
    std::vector<std::int64_t> sums(static_cast<std::size_t>(p), 0);
    for (std::size_t s = 0; s < nil.size(); ++s) sums[F.trace(trace_pairing(F, T, nil[s]))] += k0[s];
    lhs[t] = CycNum::from_power_sums(p, sums);
    k[t] = static_cast<std::int64_t>(flags_fixed(ctx, T, flags));
  });

  // targets[0] is T = 0 (index 0 in coordinate order)
  const CycNum& at0 = lhs[0];
  if (!at0.is_integer() || k[0] == 0 || at0.integer_value() % k[0] != 0) {
    out.fail("T=0", "integer multiple of k(0)", at0.to_string());
    return out;
  }
  const std::int64_t c = at0.integer_value() / k[0];
  std::int64_t expected_c = 1;
  for (int i = 0; i < n * n - n; ++i) expected_c *= F.q();
  out.expect(c == expected_c, "constant c", std::to_string(expected_c), std::to_string(c));
  out.fact("c", std::to_string(c));
  out.fact("flags", std::to_string(flags.size()));
  out.fact("nilpotents", std::to_string(nil.size()));
  out.fact("targets", std::to_string(targets.size()));
  std::uint64_t vanishing = 0;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const CycNum expected = CycNum::from_int(p, c * k[t]);
    if (k[t] == 0) ++vanishing;
    out.expect(lhs[t] == expected, "T#" + std::to_string(targets[t]), expected.to_string(), lhs[t].to_string());
  }
  out.fact("targets_with_k_zero", std::to_string(vanishing));
  return out;
}

FqMatrix random_symplectic(const SympCtx& ctx, Rng& rng) {
  const auto& F = ctx.field();
  const FqField FF(F);
  const auto d = static_cast<std::size_t>(ctx.dim_V());
  FqMatrix g = linalg::identity(FF, d);
  for (std::size_t step = 0; step < 4 * d; ++step) {
    FqVector v(d);
    for (auto& e : v) e = F.element(static_cast<std::uint32_t>(rng.below(F.q())));
    const FqElem a = F.element(static_cast<std::uint32_t>(rng.below(F.q())));
    // tau = I + a v (v^T omega)
    const FqVector w = form_row(ctx, v);
    FqMatrix tau = linalg::identity(FF, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) tau(i, j) = F.add(tau(i, j), F.mul(a, F.mul(v[i], w[j])));
    g = linalg::multiply(FF, tau, g);
  }
  return g;
}

FqMatrix conjugate(const SympCtx& ctx, const FqMatrix& g, const FqMatrix& T) {
  const FqField FF(ctx.field());
  auto gi = linalg::inverse(FF, g);
  if (!gi) throw DomainError("conjugating matrix is singular");
  return linalg::multiply(FF, linalg::multiply(FF, g, T), *gi);
}

std::map<Partition, std::uint64_t> nilpotent_census(const SympCtx& ctx) {
  const FqField FF(ctx.field());
  std::map<Partition, std::uint64_t> out;
  CoordSpace space(ctx.field(), ctx.dim_E(), 1u << 24);
  FqVector c(static_cast<std::size_t>(ctx.dim_E()));
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    space.decode(i, c);
    FqMatrix T = ctx.element(c);
    if (linalg::is_nilpotent(FF, T)) ++out[jordan_pair_type(ctx, T)];
  }
  return out;
}

std::map<Partition, std::uint64_t> flag_nilpotent_types(const SympCtx& ctx, const SympFlag& flag) {
  const auto& F = ctx.field();
  auto basis = nil_stabilizer_space(ctx, flag);
  std::map<Partition, std::uint64_t> out;
  CoordSpace space(F, static_cast<int>(basis.size()), 1u << 24);
  const auto d = static_cast<std::size_t>(ctx.dim_V());
  FqVector c(basis.size());
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    space.decode(i, c);
    FqMatrix T(d, d, F.zero());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (c[k].code)
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) T(a, b) = F.add(T(a, b), F.mul(c[k], basis[k](a, b)));
    ++out[jordan_pair_type(ctx, T)];
  }
  return out;
}

}  // namespace symspace::sympair
