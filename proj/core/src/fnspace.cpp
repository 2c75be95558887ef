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

#include "symspace/fnspace.hpp"

#include "symspace/errors.hpp"
#include "symspace/parallel.hpp"

namespace symspace {

CoordSpace::CoordSpace(const gf::FieldCtx& field, int dim, std::uint64_t max_size)
    : field_(&field), dim_(dim), size_(1) {
  if (dim < 0) throw DomainError("negative dimension");
  for (int i = 0; i < dim; ++i) {
    size_ *= field.q();
    if (size_ > max_size) throw BudgetExceeded("coordinate space F_" + std::to_string(field.q()) + "^" +
                                               std::to_string(dim) + " exceeds the enumeration budget");
  }
}

FqVector CoordSpace::vector(std::uint64_t index) const {
  FqVector v(static_cast<std::size_t>(dim_));
  decode(index, v);
  return v;
}

void CoordSpace::decode(std::uint64_t index, std::span<gf::FqElem> out) const {
  const std::uint32_t q = field_->q();
  for (int j = dim_ - 1; j >= 0; --j) {
    out[static_cast<std::size_t>(j)] = gf::FqElem{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
}

std::uint64_t CoordSpace::index(std::span<const gf::FqElem> v) const {
  std::uint64_t idx = 0;
  for (auto x : v) idx = idx * field_->q() + x.code;
  return idx;
}

FnTable FnTable::from_integers(int p, std::span<const std::int64_t> ints) {
  FnTable t{p, {}};
  t.values.reserve(ints.size());
  for (auto v : ints) t.values.push_back(CycNum::from_int(p, v));
  return t;
}

gf::FqElem bilinear(const gf::FieldCtx& field, const FqMatrix& gram, std::span<const gf::FqElem> x,
                    std::span<const gf::FqElem> y) {
  gf::FqElem acc = field.zero();
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (field.is_zero(x[i])) continue;
    gf::FqElem row = field.zero();
    for (std::size_t j = 0; j < gram.cols(); ++j) row = field.add(row, field.mul(gram(i, j), y[j]));
    acc = field.add(acc, field.mul(x[i], row));
  }
  return acc;
}

CycNum add_char(const gf::FieldCtx& field, gf::FqElem t) { return CycNum::zeta_pow(field.p(), field.trace(t)); }

FnTable fourier_transform(const gf::FieldCtx& field, const FqMatrix& gram, const FnTable& f) {
  const int p = field.p();
  const std::uint32_t q = field.q();
  const int dim = static_cast<int>(gram.rows());
  CoordSpace space(field, dim);
  if (f.size() != space.size()) throw DomainError("function table does not match the space size");
  if (f.p != p) throw DomainError("function table conductor differs from the field characteristic");

  // tr_table[w * q + y] = Tr(w y)
  std::vector<int> tr_table(static_cast<std::size_t>(q) * q);
  for (std::uint32_t w = 0; w < q; ++w)
    for (std::uint32_t y = 0; y < q; ++y) tr_table[w * q + y] = field.trace(field.mul({w}, {y}));

  const std::size_t n = space.size();
  const std::size_t P = static_cast<std::size_t>(p);
  std::vector<std::int64_t> buf(n * P, 0), tmp(n * P, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto c = f[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) buf[i * P + j] = c[j];
  }

  // Axis j has stride q^{dim-1-j}; each axis pass is a 1-D transform of
  // length q applied to every line, acting on length-p power-sum vectors.
  std::size_t stride = n;
  for (int axis = 0; axis < dim; ++axis) {
    stride /= q;
    const std::size_t outer = n / (stride * q);
    parallel_for(outer, [&](std::size_t o) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        const std::size_t base = o * stride * q + inner;
        for (std::uint32_t w = 0; w < q; ++w) {
          std::int64_t* out = &tmp[(base + w * stride) * P];
          std::fill(out, out + P, 0);
          for (std::uint32_t y = 0; y < q; ++y) {
            const std::int64_t* in = &buf[(base + y * stride) * P];
            const std::size_t rot = static_cast<std::size_t>(tr_table[w * q + y]);
            for (std::size_t k = 0; k < P; ++k) {
              std::size_t dst = k + rot;
              if (dst >= P) dst -= P;
              out[dst] = checked::add(out[dst], in[k]);
            }
          }
        }
      }
    });
    std::swap(buf, tmp);
  }

  FnTable out{p, std::vector<CycNum>(n)};
  const auto gram_t = linalg::transpose(FqField(field), gram);
  parallel_for(n, [&](std::size_t x) {
    FqVector xv = space.vector(x);
    FqVector w(static_cast<std::size_t>(dim), field.zero());
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        w[i] = field.add(w[i], field.mul(gram_t(i, j), xv[j]));
    const std::size_t src = space.index(w);
    out.values[x] = CycNum::from_power_sums(p, std::span<const std::int64_t>(&buf[src * P], P));
  });
  return out;
}

CycNum character_sum_at(const gf::FieldCtx& field, const FqMatrix& gram, const FnTable& f,
                        std::span<const gf::FqElem> x) {
  const int p = field.p();
  const int dim = static_cast<int>(gram.rows());
  CoordSpace space(field, dim);
  // Row vector x^T gram, so the pairing with y is a dot product.
  FqVector xg(static_cast<std::size_t>(dim), field.zero());
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) xg[j] = field.add(xg[j], field.mul(x[i], gram(i, j)));
  std::vector<std::int64_t> sums(static_cast<std::size_t>(p), 0);
  FqVector y(static_cast<std::size_t>(dim));
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    const CycNum& v = f[idx];
    if (v.is_zero()) continue;
    space.decode(idx, y);
    gf::FqElem t = field.zero();
    for (int j = 0; j < dim; ++j) t = field.add(t, field.mul(xg[j], y[j]));
    const int rot = field.trace(t);
    auto c = v.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto& slot = sums[(k + static_cast<std::size_t>(rot)) % static_cast<std::size_t>(p)];
      slot = checked::add(slot, c[k]);
    }
  }
  return CycNum::from_power_sums(p, sums);
}

}  // namespace symspace
