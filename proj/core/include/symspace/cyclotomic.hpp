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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symspace {

// Exact element of Z[zeta_p], p prime.
//
// Stored in the basis zeta^0, ..., zeta^{p-2}; zeta^{p-1} is rewritten as
// -(1 + zeta + ... + zeta^{p-2}), so the representation is canonical and
// equality is coefficient-wise. Arithmetic is overflow-checked and throws
// std::overflow_error rather than wrapping.
class CycNum {
 public:
  CycNum() = default;
  explicit CycNum(int p);

  static CycNum from_int(int p, std::int64_t n);
  static CycNum zeta_pow(int p, long long e);
  // Reduces sum_j sums[j] zeta^j for a vector of length p.
  static CycNum from_power_sums(int p, std::span<const std::int64_t> sums);

  int p() const { return p_; }
  std::span<const std::int64_t> coeffs() const { return c_; }

  bool is_zero() const;
  bool is_integer() const;
  // Integer value; only meaningful when is_integer().
  std::int64_t integer_value() const { return c_.empty() ? 0 : c_[0]; }

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  CycNum scaled(std::int64_t s) const;
  // Multiplication by zeta^e (a rotation in the power basis).
  CycNum times_zeta(long long e) const;

  // zeta -> zeta^{-1}, i.e. complex conjugation under any embedding.
  CycNum conj() const;
  CycNum norm_squared() const { return *this * conj(); }

  friend bool operator==(const CycNum& a, const CycNum& b) = default;

  // Evaluation at exp(2 pi i / p); used only as a cross-check.
  std::complex<double> to_complex() const;
  std::string to_string() const;

  // Length-p power-sum representation (last slot 0); inverse of from_power_sums.
  std::vector<std::int64_t> power_sums() const;

 private:
  int p_ = 0;
  std::vector<std::int64_t> c_;
};

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace symspace
