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

#include "symspace/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symspace/errors.hpp"

namespace symspace::gf {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 24;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int reduce(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int modinv(int a, int p) {
  long long t = 0, nt = 1, r = p, nr = reduce(a, p);
  if (nr == 0) throw DomainError("inverse of zero modulo " + std::to_string(p));
  while (nr != 0) {
    long long quo = r / nr;
    std::tie(t, nt) = std::pair{nt, t - quo * nt};
    std::tie(r, nr) = std::pair{nr, r - quo * nr};
  }
  return reduce(t, p);
}

namespace poly {

PolyFp trim(PolyFp a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int degree(const PolyFp& a) { return static_cast<int>(a.size()) - 1; }

PolyFp add(const PolyFp& a, const PolyFp& b, int p) {
  PolyFp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  return trim(std::move(r));
}

PolyFp sub(const PolyFp& a, const PolyFp& b, int p) {
  PolyFp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] + p) % p;
  return trim(std::move(r));
}

PolyFp mul(const PolyFp& a, const PolyFp& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + 1LL * a[i] * b[j]) % p;
  PolyFp out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = static_cast<int>(r[i]);
  return trim(std::move(out));
}

PolyFp scale(const PolyFp& a, int c, int p) {
  PolyFp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<int>(1LL * a[i] * reduce(c, p) % p);
  return trim(std::move(r));
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b, int p) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  PolyFp r = a;
  int db = degree(b);
  if (degree(r) < db) return {{}, trim(std::move(r))};
  PolyFp quo(r.size() - b.size() + 1, 0);
  int lead_inv = modinv(b.back(), p);
  for (int i = degree(r); i >= db; --i) {
    int c = static_cast<int>(1LL * r[i] * lead_inv % p);
    if (c == 0) continue;
    quo[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = reduce(r[i - db + j] - 1LL * c * b[j], p);
  }
  return {trim(std::move(quo)), trim(std::move(r))};
}

PolyFp mod(const PolyFp& a, const PolyFp& b, int p) { return divmod(a, b, p).second; }

PolyFp monic(const PolyFp& a, int p) {
  if (a.empty()) return a;
  return scale(a, modinv(a.back(), p), p);
}

PolyFp gcd(const PolyFp& a, const PolyFp& b, int p) {
  PolyFp x = trim(a), y = trim(b);
  while (!y.empty()) {
    PolyFp r = mod(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x, p);
}

PolyFp derivative(const PolyFp& a, int p) {
  if (a.size() <= 1) return {};
  PolyFp r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = static_cast<int>(1LL * a[i] * (i % p) % p);
  return trim(std::move(r));
}

PolyFp powmod(const PolyFp& base, std::uint64_t e, const PolyFp& m, int p) {
  PolyFp result = mod({1}, m, p);
  PolyFp b = mod(base, m, p);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, b, p), m, p);
    b = mod(mul(b, b, p), m, p);
    e >>= 1;
  }
  return result;
}

int eval(const PolyFp& a, int x, int p) {
  long long acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (acc * x + *it) % p;
  return static_cast<int>(acc);
}

bool is_irreducible(const PolyFp& f_in, int p) {
  PolyFp f = trim(f_in);
  int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < count; ++code) {
      PolyFp g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      if (mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

bool is_squarefree(const PolyFp& f, int p) {
  if (degree(f) < 1) return true;
  return degree(gcd(f, derivative(f, p), p)) == 0;
}

std::vector<int> factor_degrees(const PolyFp& f_in, int p) {
  PolyFp f = monic(trim(f_in), p);
  if (degree(f) < 1) throw DomainError("factor_degrees needs a polynomial of positive degree");
  if (!is_squarefree(f, p)) throw DomainError("factor_degrees needs a squarefree polynomial");
  std::vector<int> out;
  PolyFp h = {0, 1};  // t^{p^d} mod f, starting with d = 0
  for (int d = 1; degree(f) >= 2 * d; ++d) {
    h = powmod(h, static_cast<std::uint64_t>(p), f, p);
    PolyFp g = gcd(f, sub(h, {0, 1}, p), p);
    int dg = degree(g);
    if (dg > 0) {
      for (int i = 0; i < dg / d; ++i) out.push_back(d);
      f = divmod(f, g, p).first;
      h = mod(h, f, p);
    }
  }
  if (degree(f) > 0) out.push_back(degree(f));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const PolyFp& a, char var) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(a); i >= 0; --i) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || a[i] != 1) os << a[i];
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace poly

PolyFp smallest_irreducible(int p, int k) {
  if (k < 1) throw DomainError("extension degree must be >= 1");
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(p);
  for (std::uint64_t code = 0; code < count; ++code) {
    PolyFp f(k + 1, 0);
    f[k] = 1;
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    if (poly::is_irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable for prime p
}

FieldCtx::FieldCtx(int p, int k) : FieldCtx(p, smallest_irreducible(p, k)) {}

FieldCtx::FieldCtx(int p, PolyFp modulus) : p_(p), k_(0), q_(1) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw DomainError("characteristic must be prime");
  for (int& c : modulus) c = reduce(c, p);
  modulus_ = poly::trim(std::move(modulus));
  k_ = poly::degree(modulus_);
  if (k_ < 1 || modulus_.back() != 1) throw DomainError("modulus must be monic of degree >= 1");
  if (!poly::is_irreducible(modulus_, p)) throw DomainError("modulus " + poly::to_string(modulus_) + " is reducible");
  std::uint64_t q = 1;
  for (int i = 0; i < k_; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldSize) throw BudgetExceeded("field size exceeds 2^24");
  }
  q_ = static_cast<std::uint32_t>(q);
  build_tables();
}

std::uint32_t FieldCtx::mul_slow(std::uint32_t a, std::uint32_t b) const {
  PolyFp pa = coeffs({a}), pb = coeffs({b});
  PolyFp r = poly::mod(poly::mul(poly::trim(pa), poly::trim(pb), p_), modulus_, p_);
  r.resize(k_, 0);
  return from_coeffs(r).code;
}

void FieldCtx::build_tables() {
  neg_.resize(q_);
  for (std::uint32_t x = 0; x < q_; ++x) {
    auto c = coeffs({x});
    for (int& v : c) v = (p_ - v) % p_;
    neg_[x] = from_coeffs(c).code;
  }

  const std::uint32_t order = q_ - 1;
  log_.assign(q_, 0);
  exp_.assign(2 * static_cast<std::size_t>(std::max<std::uint32_t>(order, 1)), 0);
  if (q_ == 2) {
    exp_ = {1, 1};
  } else {
    auto factors = prime_factors(order);
    auto pow_slow = [&](std::uint32_t g, std::uint64_t e) {
      std::uint32_t r = 1, b = g;
      while (e) {
        if (e & 1) r = mul_slow(r, b);
        b = mul_slow(b, b);
        e >>= 1;
      }
      return r;
    };
    std::uint32_t gen = 0;
    for (std::uint32_t cand = 2; cand < q_ && gen == 0; ++cand) {
      bool primitive = std::all_of(factors.begin(), factors.end(),
                                   [&](std::uint64_t f) { return pow_slow(cand, order / f) != 1; });
      if (primitive) gen = cand;
    }
    if (gen == 0) throw DomainError("no multiplicative generator found");
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      exp_[i] = cur;
      exp_[i + order] = cur;
      log_[cur] = i;
      cur = mul_slow(cur, gen);
    }
  }

  zech_.assign(std::max<std::uint32_t>(order, 1), -1);
  if (k_ > 1) {
    for (std::uint32_t i = 0; i < order; ++i) {
      auto c = coeffs({exp_[i]});
      c[0] = (c[0] + 1) % p_;
      std::uint32_t s = from_coeffs(c).code;
      zech_[i] = s == 0 ? -1 : static_cast<std::int32_t>(log_[s]);
    }
  }

  trace_.assign(q_, 0);
  for (std::uint32_t x = 0; x < q_; ++x) {
    std::uint32_t acc = 0, cur = x;
    for (int i = 0; i < k_; ++i) {
      acc = add({acc}, {cur}).code;
      cur = pow({cur}, p_).code;
    }
    if (acc >= static_cast<std::uint32_t>(p_)) throw DomainError("trace left the prime field");
    trace_[x] = static_cast<std::uint8_t>(acc);
  }
}

FqElem FieldCtx::element(std::uint32_t index) const {
  if (index >= q_) throw DomainError("field element index out of range");
  return {index};
}

FqElem FieldCtx::from_int(long long n) const { return {static_cast<std::uint32_t>(reduce(n, p_))}; }

FqElem FieldCtx::from_coeffs(std::span<const int> c) const {
  if (static_cast<int>(c.size()) > k_) throw DomainError("too many coordinates for this field");
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + static_cast<std::uint32_t>(reduce(c[i], p_));
  return {code};
}

std::vector<int> FieldCtx::coeffs(FqElem x) const {
  std::vector<int> c(k_, 0);
  std::uint32_t v = x.code;
  for (int i = 0; i < k_; ++i) {
    c[i] = static_cast<int>(v % p_);
    v /= p_;
  }
  return c;
}

FqElem FieldCtx::add(FqElem a, FqElem b) const {
  if (k_ == 1) {
    std::uint32_t s = a.code + b.code;
    return {s >= q_ ? s - q_ : s};
  }
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  const std::uint32_t order = q_ - 1;
  std::uint32_t la = log_[a.code], lb = log_[b.code];
  std::uint32_t d = lb >= la ? lb - la : lb + order - la;
  std::int32_t z = zech_[d];
  if (z < 0) return {0};
  return {exp_[la + static_cast<std::uint32_t>(z)]};
}

FqElem FieldCtx::neg(FqElem a) const { return {neg_[a.code]}; }

FqElem FieldCtx::mul(FqElem a, FqElem b) const {
  if (a.code == 0 || b.code == 0) return {0};
  if (k_ == 1) return {static_cast<std::uint32_t>(1ULL * a.code * b.code % q_)};
  return {exp_[log_[a.code] + log_[b.code]]};
}

FqElem FieldCtx::inv(FqElem a) const {
  if (a.code == 0) throw DomainError("inverse of zero in " + describe());
  const std::uint32_t order = q_ - 1;
  std::uint32_t l = log_[a.code];
  return {exp_[l == 0 ? 0 : order - l]};
}

FqElem FieldCtx::pow(FqElem a, long long e) const {
  if (a.code == 0) {
    if (e < 0) throw DomainError("negative power of zero");
    return e == 0 ? one() : zero();
  }
  const long long order = q_ - 1;
  long long r = (static_cast<long long>(log_[a.code]) * (e % order)) % order;
  if (r < 0) r += order;
  return {exp_[static_cast<std::size_t>(r)]};
}

std::uint32_t FieldCtx::log(FqElem x) const {
  if (x.code == 0) throw DomainError("discrete log of zero");
  return log_[x.code];
}

int FieldCtx::quad_char(FqElem x) const {
  if (p_ == 2) throw UnsupportedCharacteristic("quadratic character needs odd characteristic");
  if (x.code == 0) return 0;
  return (log_[x.code] % 2 == 0) ? 1 : -1;
}

std::optional<FqElem> FieldCtx::sqrt(FqElem x) const {
  if (x.code == 0) return zero();
  if (p_ == 2) return pow(x, q_ / 2);  // Frobenius is bijective
  std::uint32_t l = log_[x.code];
  if (l % 2 != 0) return std::nullopt;
  return FqElem{exp_[l / 2]};
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (k_ > 1) os << " = F_" << p_ << "[t]/(" << poly::to_string(modulus_) << ")";
  return os.str();
}

std::string FieldCtx::format(FqElem x) const {
  if (k_ == 1) return std::to_string(x.code);
  return poly::to_string(poly::trim(coeffs(x)));
}

}  // namespace symspace::gf
