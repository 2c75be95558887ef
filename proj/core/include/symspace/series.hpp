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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symspace/fields.hpp"

namespace symspace::series {

inline constexpr int kDefaultPrecision = 8;

// c_0 + c_1 e + ... + c_{K-1} e^{K-1} + O(e^K) with rational coefficients.
class TruncSeries {
 public:
  explicit TruncSeries(int precision = kDefaultPrecision);
  TruncSeries(std::vector<Rational> coeffs, int precision);
  static TruncSeries constant(const Rational& c, int precision = kDefaultPrecision);
  static TruncSeries monomial(const Rational& c, int power, int precision = kDefaultPrecision);

  int precision() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  // Coefficient of e^k, or nullopt beyond the precision.
  std::optional<Rational> coeff(int k) const;

  // Least k with c_k != 0; nullopt when every known coefficient vanishes.
  std::optional<int> valuation() const;
  bool is_zero_to_precision() const { return !valuation(); }

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries scaled(const Rational& s) const;
  TruncSeries shifted(int power) const;  // multiply by e^power, power >= 0
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

// Polynomials over Q, low degree first, trimmed.
using QPoly = std::vector<Rational>;
namespace qpoly {
QPoly trim(QPoly a);
int degree(const QPoly& a);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& s);
QPoly derivative(const QPoly& a);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);
bool is_squarefree(const QPoly& a);
std::string to_string(const QPoly& a, char var = 'Y');
}  // namespace qpoly

// One edge of the Newton polygon: `length` roots of valuation `slope`.
struct Segment {
  Rational slope;
  int length = 0;
  int lo = 0;  // X-degree range [lo, hi] of the edge
  int hi = 0;
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Lower convex hull of the points (i, v(c_i)) of sum c_i X^i; segments are
// listed by increasing root valuation. Unresolved coefficients are allowed
// only where their precision bound keeps them above the hull.
struct NewtonPolygon {
  std::vector<Segment> segments;
  std::vector<std::optional<int>> valuations;
  int degree() const;
};

NewtonPolygon newton_polygon(std::span<const TruncSeries> poly);

// Leading coefficients of the points on a segment with slope a/b, as a
// polynomial in Y of degree length / b.
QPoly residual_polynomial(std::span<const TruncSeries> poly, const NewtonPolygon& np, const Segment& seg);

}  // namespace symspace::series
