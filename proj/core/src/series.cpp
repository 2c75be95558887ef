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

#include "symspace/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "symspace/errors.hpp"

namespace symspace::series {

TruncSeries::TruncSeries(int precision) : c_(static_cast<std::size_t>(precision), Rational(0)) {
  if (precision < 1) throw DomainError("series precision must be positive");
}

TruncSeries::TruncSeries(std::vector<Rational> coeffs, int precision) : c_(std::move(coeffs)) {
  if (precision < 1) throw DomainError("series precision must be positive");
  c_.resize(static_cast<std::size_t>(precision), Rational(0));
}

TruncSeries TruncSeries::constant(const Rational& c, int precision) { return monomial(c, 0, precision); }

TruncSeries TruncSeries::monomial(const Rational& c, int power, int precision) {
  TruncSeries s(precision);
  if (power < precision) s[power] = c;
  return s;
}

std::optional<Rational> TruncSeries::coeff(int k) const {
  if (k < 0) return Rational(0);
  if (k >= precision()) return std::nullopt;
  return c_[static_cast<std::size_t>(k)];
}

std::optional<int> TruncSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return std::nullopt;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int K = std::min(a.precision(), b.precision());
  TruncSeries r(K);
  for (int i = 0; i < K; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j < K; ++j)
      if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncSeries TruncSeries::scaled(const Rational& s) const {
  TruncSeries r(*this);
  for (auto& x : r.c_) x *= s;
  return r;
}

TruncSeries TruncSeries::shifted(int power) const {
  if (power < 0) throw DomainError("negative shift");
  TruncSeries r(precision());
  for (int k = 0; k + power < precision(); ++k) r.c_[k + power] = c_[k];
  return r;
}

std::string TruncSeries::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[k].str() + ")";
    if (k) s += "e^" + std::to_string(k);
  }
  return (s.empty() ? "0" : s) + " + O(e^" + std::to_string(c_.size()) + ")";
}

namespace qpoly {

QPoly trim(QPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int degree(const QPoly& a) { return static_cast<int>(trim(a).size()) - 1; }

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

QPoly scale(const QPoly& a, const Rational& s) {
  QPoly r(a);
  for (auto& x : r) x *= s;
  return trim(r);
}

QPoly derivative(const QPoly& a) {
  QPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long long>(i));
  return trim(r);
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  QPoly r = trim(a);
  const QPoly d = trim(b);
  if (d.empty()) throw DomainError("polynomial division by zero");
  if (r.size() < d.size()) return {{}, r};
  QPoly quot(r.size() - d.size() + 1, Rational(0));
  while (!r.empty() && r.size() >= d.size()) {
    const std::size_t shift = r.size() - d.size();
    const Rational f = r.back() / d.back();
    quot[shift] = f;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
    r = trim(r);
  }
  return {trim(quot), r};
}

QPoly monic(const QPoly& a) {
  QPoly t = trim(a);
  if (t.empty()) return t;
  return scale(t, 1 / t.back());
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = trim(a), y = trim(b);
  while (!y.empty()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

bool is_squarefree(const QPoly& a) { return degree(gcd(a, derivative(a))) == 0; }

std::string to_string(const QPoly& a, char var) {
  const QPoly t = trim(a);
  if (t.empty()) return "0";
  std::string s;
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + t[i].str() + ")";
    if (i) s += std::string(1, var) + "^" + std::to_string(i);
  }
  return s;
}

}  // namespace qpoly

int NewtonPolygon::degree() const { return static_cast<int>(valuations.size()) - 1; }

NewtonPolygon newton_polygon(std::span<const TruncSeries> poly) {
  if (poly.size() < 2) throw DomainError("Newton polygon needs degree >= 1");
  NewtonPolygon np;
  for (const auto& c : poly) np.valuations.push_back(c.valuation());
  const int deg = static_cast<int>(poly.size()) - 1;
  if (!np.valuations[0] || !np.valuations[static_cast<std::size_t>(deg)])
    throw InsufficientPrecision("constant or leading coefficient vanishes to the working precision");

  // lower hull over resolved points, scanning left to right
  std::vector<int> hull;
  auto v = [&](int i) { return Rational(*np.valuations[static_cast<std::size_t>(i)]); };
  auto cross = [&](int o, int a, int b) {
    // (a - o) x (b - o) <= 0 means a is not strictly below segment o-b
    return Rational(a - o) * (v(b) - v(o)) - Rational(b - o) * (v(a) - v(o));
  };
  for (int i = 0; i <= deg; ++i) {
    if (!np.valuations[static_cast<std::size_t>(i)]) continue;
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), i) <= 0) hull.pop_back();
    hull.push_back(i);
  }
  // unresolved coefficients must lie strictly above the hull
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int a = hull[e], b = hull[e + 1];
    for (int i = a + 1; i < b; ++i) {
      if (np.valuations[static_cast<std::size_t>(i)]) continue;
      const Rational on_hull = v(a) + (v(b) - v(a)) * Rational(i - a, b - a);
      if (Rational(poly[static_cast<std::size_t>(i)].precision()) <= on_hull)
        throw InsufficientPrecision("an unresolved coefficient could lie on the Newton polygon");
    }
  }
  for (std::size_t e = hull.size() - 1; e-- > 0;) {
    const int a = hull[e], b = hull[e + 1];
    np.segments.push_back({(v(a) - v(b)) / Rational(b - a), b - a, a, b});
  }
  return np;
}

QPoly residual_polynomial(std::span<const TruncSeries> poly, const NewtonPolygon& np, const Segment& seg) {
  const auto den = boost::multiprecision::denominator(seg.slope);
  const int b = static_cast<int>(den);
  const int v_lo = *np.valuations[static_cast<std::size_t>(seg.lo)];
  QPoly R;
  for (int i = seg.lo; i <= seg.hi; i += b) {
    // valuation on the segment at X-degree i
    const Rational on = Rational(v_lo) - seg.slope * (i - seg.lo);
    const int k = static_cast<int>(boost::multiprecision::numerator(on));
    if (boost::multiprecision::denominator(on) != 1) throw std::logic_error("segment lattice point is not integral");
    auto c = poly[static_cast<std::size_t>(i)].coeff(k);
    if (!c) throw InsufficientPrecision("residual coefficient beyond working precision");
    R.push_back(*c);
  }
  return qpoly::trim(R);
}

}  // namespace symspace::series
