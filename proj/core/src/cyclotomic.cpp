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

#include "symspace/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "symspace/errors.hpp"

namespace symspace {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("CycNum coefficient overflow");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("CycNum coefficient overflow");
  return r;
}

}  // namespace checked

CycNum::CycNum(int p) : p_(p), c_(static_cast<std::size_t>(p - 1), 0) {
  if (p < 2) throw DomainError("cyclotomic conductor must be a prime >= 2");
}

CycNum CycNum::from_int(int p, std::int64_t n) {
  CycNum r(p);
  r.c_[0] = n;
  return r;
}

CycNum CycNum::zeta_pow(int p, long long e) {
  std::vector<std::int64_t> s(p, 0);
  long long k = e % p;
  if (k < 0) k += p;
  s[static_cast<std::size_t>(k)] = 1;
  return from_power_sums(p, s);
}

CycNum CycNum::from_power_sums(int p, std::span<const std::int64_t> sums) {
  if (static_cast<int>(sums.size()) != p) throw DomainError("power-sum vector must have length p");
  CycNum r(p);
  const std::int64_t top = sums[static_cast<std::size_t>(p - 1)];
  for (int j = 0; j + 1 < p; ++j) r.c_[j] = checked::add(sums[j], -top);
  return r;
}

std::vector<std::int64_t> CycNum::power_sums() const {
  std::vector<std::int64_t> s(c_.begin(), c_.end());
  s.push_back(0);
  return s;
}

bool CycNum::is_zero() const {
  for (auto v : c_)
    if (v != 0) return false;
  return true;
}

bool CycNum::is_integer() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& v : r.c_) v = checked::mul(v, -1);
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (p_ == 0) return *this = o;
  if (o.p_ == 0) return *this;
  if (o.p_ != p_) throw DomainError("CycNum conductor mismatch");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = checked::add(c_[j], o.c_[j]);
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.p_ != b.p_) throw DomainError("CycNum conductor mismatch");
  const int p = a.p_;
  std::vector<std::int64_t> s(p, 0);
  for (int i = 0; i + 1 < p; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j + 1 < p; ++j) {
      if (b.c_[j] == 0) continue;
      auto& slot = s[static_cast<std::size_t>((i + j) % p)];
      slot = checked::add(slot, checked::mul(a.c_[i], b.c_[j]));
    }
  }
  return CycNum::from_power_sums(p, s);
}

CycNum CycNum::scaled(std::int64_t s) const {
  CycNum r = *this;
  for (auto& v : r.c_) v = checked::mul(v, s);
  return r;
}

CycNum CycNum::times_zeta(long long e) const {
  std::vector<std::int64_t> s(p_, 0);
  long long k = e % p_;
  if (k < 0) k += p_;
  for (int j = 0; j + 1 < p_; ++j) s[static_cast<std::size_t>((j + k) % p_)] = c_[j];
  return from_power_sums(p_, s);
}

CycNum CycNum::conj() const {
  std::vector<std::int64_t> s(p_, 0);
  for (int j = 0; j + 1 < p_; ++j) s[static_cast<std::size_t>((p_ - j) % p_)] = c_[j];
  return from_power_sums(p_, s);
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> acc = 0.0;
  for (int j = 0; j + 1 < p_; ++j) {
    double angle = 2.0 * std::numbers::pi * j / p_;
    acc += static_cast<double>(c_[j]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string CycNum::to_string() const {
  if (is_integer()) return std::to_string(integer_value());
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j + 1 < p_; ++j) {
    if (c_[j] == 0) continue;
    if (!first) os << (c_[j] > 0 ? " + " : " - ");
    else if (c_[j] < 0) os << '-';
    first = false;
    std::int64_t m = c_[j] < 0 ? -c_[j] : c_[j];
    if (j == 0 || m != 1) os << m;
    if (j >= 1) os << "z" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return os.str();
}

}  // namespace symspace
