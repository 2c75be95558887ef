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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symspace::gf {

// Dense polynomial over F_p; entry i is the coefficient of t^i, all entries
// reduced to [0, p) and no trailing zeros (the zero polynomial is empty).
using PolyFp = std::vector<int>;

namespace poly {

PolyFp trim(PolyFp a);
int degree(const PolyFp& a);
PolyFp add(const PolyFp& a, const PolyFp& b, int p);
PolyFp sub(const PolyFp& a, const PolyFp& b, int p);
PolyFp mul(const PolyFp& a, const PolyFp& b, int p);
PolyFp scale(const PolyFp& a, int c, int p);
std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b, int p);
PolyFp mod(const PolyFp& a, const PolyFp& b, int p);
PolyFp monic(const PolyFp& a, int p);
// Monic gcd; gcd(0, 0) = 0.
PolyFp gcd(const PolyFp& a, const PolyFp& b, int p);
PolyFp derivative(const PolyFp& a, int p);
PolyFp powmod(const PolyFp& base, std::uint64_t e, const PolyFp& m, int p);
int eval(const PolyFp& a, int x, int p);

// Irreducibility by trial division with every monic polynomial of degree
// at most deg(f)/2. Intended for desk-scale degrees.
bool is_irreducible(const PolyFp& f, int p);
bool is_squarefree(const PolyFp& f, int p);

// Degrees of the irreducible factors of a squarefree polynomial of positive
// degree (distinct-degree factorization), sorted ascending.
std::vector<int> factor_degrees(const PolyFp& f, int p);

std::string to_string(const PolyFp& a, char var = 't');

}  // namespace poly

int modinv(int a, int p);
bool is_prime(std::uint64_t n);

// Element of F_q, stored as the base-p integer code sum_i c_i p^i of its
// coordinate vector (c_0, ..., c_{k-1}) in the power basis of the modulus.
// The code doubles as the element's position in the canonical enumeration.
struct FqElem {
  std::uint32_t code = 0;
  friend constexpr auto operator<=>(FqElem, FqElem) = default;
};

// The field F_q = F_p[t]/(modulus), q = p^k.
//
// Construction builds discrete-log, Zech-log and trace tables, so every
// operation afterwards is O(1). Objects are immutable and safe to share
// between threads. Sizes are limited to q <= 2^24.
class FieldCtx {
 public:
  // Prime field F_p, or F_{p^k} with the lexicographically smallest monic
  // irreducible modulus of degree k (coefficients compared from t^{k-1}
  // down to t^0).
  explicit FieldCtx(int p, int k = 1);
  // Explicit monic modulus of degree k >= 1; rejected unless irreducible.
  FieldCtx(int p, PolyFp modulus);

  int p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t q() const { return q_; }
  const PolyFp& modulus() const { return modulus_; }
  bool is_prime_field() const { return k_ == 1; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  FqElem element(std::uint32_t index) const;
  FqElem from_int(long long n) const;
  FqElem from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(FqElem x) const;

  bool is_zero(FqElem x) const { return x.code == 0; }
  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  // Throws DomainError on zero.
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  // Negative exponents are allowed for nonzero bases.
  FqElem pow(FqElem a, long long e) const;

  // Absolute trace x + x^p + ... + x^{p^{k-1}}, as a residue in [0, p).
  int trace(FqElem x) const { return trace_[x.code]; }
  // 0 at zero, +1 on nonzero squares, -1 otherwise. p = 2 is unsupported.
  int quad_char(FqElem x) const;
  std::optional<FqElem> sqrt(FqElem x) const;

  // Fixed multiplicative generator used by the log tables.
  FqElem generator() const { return {exp_[1]}; }
  std::uint32_t log(FqElem x) const;

  std::string describe() const;
  std::string format(FqElem x) const;

 private:
  void build_tables();
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  int p_;
  int k_;
  std::uint32_t q_;
  PolyFp modulus_;
  std::vector<std::uint32_t> exp_;   // exp_[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log_;   // log_[x] for x != 0
  std::vector<std::int32_t> zech_;   // log(1 + g^i) or -1 when 1 + g^i = 0
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint8_t> trace_;
};

// Lexicographically smallest monic irreducible polynomial of degree k over F_p.
PolyFp smallest_irreducible(int p, int k);

}  // namespace symspace::gf
