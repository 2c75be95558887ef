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

#include "symspace/psi.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <stdexcept>

#include "symspace/errors.hpp"
#include "symspace/linalg.hpp"
#include "symspace/quiverorb.hpp"
#include "symspace/random.hpp"

namespace symspace::psi {

using series::QPoly;
using series::TruncSeries;

namespace {

constexpr int kSampleBound = 20;
constexpr int kCoeffCount = 4 * series::kDefaultPrecision;

Rational draw(Rng& rng) { return Rational(rng.uniform(-kSampleBound, kSampleBound)); }

std::vector<Rational> draw_coeffs(Rng& rng) {
  std::vector<Rational> v(kCoeffCount);
  for (auto& x : v) x = draw(rng);
  return v;
}

TruncSeries truncate(const std::vector<Rational>& v, int K) {
  return TruncSeries(std::vector<Rational>(v.begin(), v.begin() + std::min<std::ptrdiff_t>(K, std::ssize(v))), K);
}

using SMat = std::vector<std::vector<TruncSeries>>;

SMat smat_mul(const SMat& a, const SMat& b) {
  const int K = a[0][0].precision();
  SMat r(a.size(), std::vector<TruncSeries>(b[0].size(), TruncSeries(K)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero_to_precision()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

// x + e J with x, J constant rational matrices.
SMat perturb(const linalg::Mat<RationalField>& x, const linalg::Mat<RationalField>& J, int K) {
  SMat m(x.rows(), std::vector<TruncSeries>(x.cols(), TruncSeries(K)));
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      m[i][j][0] = x(i, j);
      if (K > 1) m[i][j][1] = J(i, j);
    }
  return m;
}

long long as_ll(const BigInt& v) { return static_cast<long long>(v); }

}  // namespace

std::vector<TruncSeries> charpoly(const SMat& A) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = A.size();
  const int K = n ? A[0][0].precision() : series::kDefaultPrecision;
  std::vector<TruncSeries> c(n + 1, TruncSeries(K));
  c[n] = TruncSeries::constant(1, K);
  SMat M(n, std::vector<TruncSeries>(n, TruncSeries(K)));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) M[i][i] += c[n - k + 1];
    M = smat_mul(A, M);
    TruncSeries tr(K);
    for (std::size_t i = 0; i < n; ++i) tr += M[i][i];
    c[n - k] = tr.scaled(Rational(-1) / static_cast<long long>(k));
  }
  return c;
}

WClass gamma(int j) {
  if (j < 1 || j > 5) throw DomainError("gamma index must be in [1, 5]");
  return {Family::gl22, "gamma" + std::to_string(j)};
}

WClass so_class(bool even) { return {Family::so, even ? "even" : "odd"}; }

WClass partition_class(const std::vector<int>& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
  return {Family::glsp, s + ")"};
}

WClass classify_quadratic(const TruncSeries& t, const TruncSeries& d) {
  const std::array<TruncSeries, 3> poly{d, -t, TruncSeries::constant(1, d.precision())};
  const auto np = series::newton_polygon(poly);
  const auto vdisc = (t * t - d.scaled(4)).valuation();
  if (!vdisc) throw InsufficientPrecision("discriminant vanishes to the working precision");
  if (np.segments.size() == 1) {
    const Rational& s = np.segments[0].slope;
    const auto den = boost::multiprecision::denominator(s);
    if (den == 2) return gamma(4);
    if (den != 1) throw std::logic_error("quadratic with root valuation outside Z/2");
    if (*vdisc % 2 != 0) return gamma(5);
    return gamma(as_ll(boost::multiprecision::numerator(s)) % 2 == 0 ? 1 : 2);
  }
  const bool e0 = as_ll(boost::multiprecision::numerator(np.segments[0].slope)) % 2 == 0;
  const bool e1 = as_ll(boost::multiprecision::numerator(np.segments[1].slope)) % 2 == 0;
  if (e0 && e1) return gamma(1);
  if (!e0 && !e1) return gamma(2);
  return gamma(3);
}

WClass tabulated_psi_gl22(int i) {
  static constexpr int table[10] = {4, 4, 2, 2, 2, 2, 2, 3, 3, 1};
  if (i < 1 || i > 10) throw DomainError("representative index must be in [1, 10]");
  return gamma(table[i - 1]);
}

namespace {

struct Xi0 {
  Rational a, b, c, d, x, y, z, u;
};

Xi0 constant_terms(const Xi& xi) {
  return {xi.a[0], xi.b[0], xi.c[0], xi.d[0], xi.x[0], xi.y[0], xi.z[0], xi.u[0]};
}

// Displayed genericity conditions. For N_3 and N_4 the leading discriminant
// coefficient of the computed P_i is required to be nonzero as well.
bool generic(int i, const Xi0& s) {
  auto nz = [](const Rational& r) { return r != 0; };
  const Rational ad_bc = s.a * s.d - s.b * s.c;
  const Rational xu_yz = s.x * s.u - s.y * s.z;
  switch (i) {
    case 1:
      return nz(s.x);
    case 2:
      return nz(s.a);
    case 3: {
      const Rational tr = s.z + s.d;
      return nz(s.c * s.x * (tr * tr - 4 * s.c * s.x)) && nz(tr * tr + 4 * s.c * s.x);
    }
    case 4: {
      const Rational tr = s.b + s.u;
      return nz(s.a * s.y * (tr * tr - 4 * s.a * s.y)) && nz(tr * tr + 4 * s.a * s.y);
    }
    case 5:
      return nz(xu_yz * ((s.z - s.y) * (s.z - s.y) + 4 * s.x * s.u));
    case 6:
      return nz(ad_bc * ((s.b - s.c) * (s.b - s.c) + 4 * s.a * s.d));
    case 7:
      return nz(s.c * s.z * (s.z - s.c));
    case 8:
      return nz(s.c * s.z * xu_yz);
    case 9:
      return nz(s.a * s.u * ad_bc);
    case 10: {
      const Rational tr = s.a * s.x + s.b * s.z + s.c * s.y + s.d * s.u;
      return nz(ad_bc * xu_yz) && nz(tr * tr - 4 * ad_bc * xu_yz);
    }
    default:
      throw DomainError("representative index must be in [1, 10]");
  }
}

using QMat = linalg::Mat<RationalField>;

QMat random_gl2q(const RationalField& Q, Rng& rng) {
  for (;;) {
    QMat g = linalg::zeros(Q, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) g(i, j) = draw(rng);
    if (linalg::determinant(Q, g) != 0) return g;
  }
}

// xi as a pair of 2x2 matrices at order k: A = [[a, c], [b, d]], B = [[x, z], [y, u]].
QMat xi_A(const RationalField& Q, const Xi& xi, std::size_t k) {
  QMat m = linalg::zeros(Q, 2, 2);
  m(0, 0) = xi.a[k], m(0, 1) = xi.c[k], m(1, 0) = xi.b[k], m(1, 1) = xi.d[k];
  return m;
}
QMat xi_B(const RationalField& Q, const Xi& xi, std::size_t k) {
  QMat m = linalg::zeros(Q, 2, 2);
  m(0, 0) = xi.x[k], m(0, 1) = xi.z[k], m(1, 0) = xi.y[k], m(1, 1) = xi.u[k];
  return m;
}

Xi draw_xi(Rng& rng) {
  Xi xi;
  for (auto* v : {&xi.a, &xi.b, &xi.c, &xi.d, &xi.x, &xi.y, &xi.z, &xi.u}) *v = draw_coeffs(rng);
  return xi;
}

// xi with (A, B) -> (P A R, S B T) applied coefficientwise.
Xi transform(const RationalField& Q, const Xi& xi, const QMat& P, const QMat& R, const QMat& S, const QMat& T) {
  Xi out = xi;
  for (std::size_t k = 0; k < xi.a.size(); ++k) {
    const QMat A = linalg::multiply(Q, linalg::multiply(Q, P, xi_A(Q, xi, k)), R);
    const QMat B = linalg::multiply(Q, linalg::multiply(Q, S, xi_B(Q, xi, k)), T);
    out.a[k] = A(0, 0), out.c[k] = A(0, 1), out.b[k] = A(1, 0), out.d[k] = A(1, 1);
    out.x[k] = B(0, 0), out.z[k] = B(0, 1), out.y[k] = B(1, 0), out.u[k] = B(1, 1);
  }
  return out;
}

SMat pair_series(const QMat& N, const std::array<const std::vector<Rational>*, 4>& rows, int K) {
  // rows lists the entries (0,0), (0,1), (1,0), (1,1)
  SMat m(2, std::vector<TruncSeries>(2, TruncSeries(K)));
  for (std::size_t e = 0; e < 4; ++e) {
    const std::size_t i = e / 2, j = e % 2;
    m[i][j] = truncate(*rows[e], K).shifted(1);
    m[i][j][0] += N(i, j);
  }
  return m;
}

}  // namespace

Gl22Sample sample_gl22(int i, const Gl22Options& opts) {
  if (opts.precision < 1 || 2 * opts.precision > kCoeffCount) throw DomainError("precision out of range");
  const RationalField Q;
  Rng rng(opts.seed);
  auto N = quiverorb::gl22_representative(Q, i);
  QMat g = linalg::identity(Q, 2), h = linalg::identity(Q, 2);
  if (opts.conjugate) {
    g = random_gl2q(Q, rng);
    h = random_gl2q(Q, rng);
    N = quiverorb::act(Q, g, h, N);
  }
  const QMat gi = *linalg::inverse(Q, g), hi = *linalg::inverse(Q, h);
  for (int attempt = 1; attempt <= opts.max_attempts; ++attempt) {
    const Xi drawn = draw_xi(rng);
    // The perturbation of the conjugated pair, pulled back to N_i's frame.
    const Xi base = opts.conjugate ? transform(Q, drawn, hi, g, gi, h) : drawn;
    if (!generic(i, constant_terms(base))) continue;
    for (int K = opts.precision; K <= 2 * opts.precision; K *= 2) {
      const SMat A = pair_series(N.A, {&drawn.a, &drawn.c, &drawn.b, &drawn.d}, K);
      const SMat B = pair_series(N.B, {&drawn.x, &drawn.z, &drawn.y, &drawn.u}, K);
      const SMat AB = smat_mul(A, B);
      Gl22Sample out;
      out.xi = base;
      out.t = AB[0][0] + AB[1][1];
      out.d = AB[0][0] * AB[1][1] - AB[0][1] * AB[1][0];
      out.attempts = attempt;
      out.precision = K;
      try {
        out.cls = classify_quadratic(out.t, out.d);
        return out;
      } catch (const InsufficientPrecision&) {
      }
    }
  }
  throw DegenerateSampling("no generic perturbation of N_" + std::to_string(i) + " within " +
                           std::to_string(opts.max_attempts) + " attempts");
}

WClass psi_gl22(int i, std::uint64_t seed) { return sample_gl22(i, {.seed = seed}).cls; }

Outcome verify_Pi(int i, std::uint64_t seed) {
  const auto s = sample_gl22(i, {.seed = seed});
  const Xi0 v = constant_terms(s.xi);
  const Rational ad_bc = v.a * v.d - v.b * v.c;
  const Rational xu_yz = v.x * v.u - v.y * v.z;
  struct Check {
    char series;  // 't' or 'd'
    int order;
    Rational expected;
  };
  std::vector<Check> checks;
  auto zeros = [&](char which, int upto) {
    for (int k = 0; k < upto; ++k) checks.push_back({which, k, 0});
  };
  switch (i) {
    case 1:
      zeros('t', 1), zeros('d', 1), checks.push_back({'d', 1, v.x});
      break;
    case 2:
      zeros('t', 1), zeros('d', 1), checks.push_back({'d', 1, v.a});
      break;
    case 3:
      zeros('t', 1), checks.push_back({'t', 1, v.z + v.d}), zeros('d', 2), checks.push_back({'d', 2, v.c * v.x});
      break;
    case 4:
      zeros('t', 1), checks.push_back({'t', 1, v.b + v.u}), zeros('d', 2), checks.push_back({'d', 2, v.a * v.y});
      break;
    case 5:
      zeros('t', 1), checks.push_back({'t', 1, v.z + v.y}), zeros('d', 2), checks.push_back({'d', 2, -xu_yz});
      break;
    case 6:
      zeros('t', 1), checks.push_back({'t', 1, v.b + v.c}), zeros('d', 2), checks.push_back({'d', 2, -ad_bc});
      break;
    case 7:
      zeros('t', 1), checks.push_back({'t', 1, v.z + v.c}), zeros('d', 2), checks.push_back({'d', 2, v.c * v.z});
      break;
    case 8:
      zeros('t', 1), checks.push_back({'t', 1, v.z}), zeros('d', 3), checks.push_back({'d', 3, v.c * xu_yz});
      break;
    case 9:
      zeros('t', 1), checks.push_back({'t', 1, v.a}), zeros('d', 3), checks.push_back({'d', 3, v.u * ad_bc});
      break;
    case 10:
      zeros('t', 2);
      checks.push_back({'t', 2, v.a * v.x + v.b * v.z + v.c * v.y + v.d * v.u});
      zeros('d', 4), checks.push_back({'d', 4, ad_bc * xu_yz});
      break;
    default:
      throw DomainError("representative index must be in [1, 10]");
  }
  Outcome out;
  for (const auto& c : checks) {
    const TruncSeries& ser = c.series == 't' ? s.t : s.d;
    const Rational got = ser[c.order];
    const std::string where = "P" + std::to_string(i) + " " + c.series + "[" + std::to_string(c.order) + "]";
    out.expect(got == c.expected, where, c.expected.str(), got.str());
    if (got != c.expected && got == -c.expected) out.fact("sign_flip", where);
  }
  out.fact("class", s.cls.label);
  return out;
}

namespace {

QMat jordan_nilpotent(const RationalField& Q, const std::vector<int>& lambda, int n) {
  QMat N = linalg::zeros(Q, n, n);
  int base = 0;
  for (int m : lambda) {
    for (int k = 0; k + 1 < m; ++k) N(base + k, base + k + 1) = 1;
    base += m;
  }
  return N;
}

// J = [[P, Q], [R, P^T]] with Q, R antisymmetric: self-adjoint for the
// standard symplectic form.
QMat random_self_adjoint(const RationalField& Qf, int n, Rng& rng) {
  QMat J = linalg::zeros(Qf, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      J(i, j) = draw(rng);
      J(n + j, n + i) = J(i, j);
    }
  for (int off : {0, 1})
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Rational r = draw(rng);
        const std::size_t ro = off ? n : 0, co = off ? 0 : n;
        J(ro + i, co + j) = r;
        J(ro + j, co + i) = -r;
      }
  return J;
}

// Polygon heights at X-degrees 0..deg, cycle lengths read from the
// residuals; parts is empty when some residual is not lc * h^2 with h
// squarefree.
struct GlspSample {
  std::vector<Rational> heights;
  std::vector<int> parts;
};

GlspSample read_charpoly(const std::vector<TruncSeries>& chi) {
  const auto np = series::newton_polygon(chi);
  GlspSample out;
  const int deg = static_cast<int>(chi.size()) - 1;
  out.heights.assign(static_cast<std::size_t>(deg) + 1, 0);
  auto segs = np.segments;
  std::sort(segs.begin(), segs.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  Rational h = *np.valuations[0];
  for (const auto& seg : segs) {
    for (int i = seg.lo; i <= seg.hi; ++i) out.heights[static_cast<std::size_t>(i)] = h - seg.slope * (i - seg.lo);
    h -= seg.slope * (seg.hi - seg.lo);
  }
  for (const auto& seg : segs) {
    const int b = static_cast<int>(as_ll(boost::multiprecision::denominator(seg.slope)));
    const QPoly R = series::qpoly::trim(series::residual_polynomial(chi, np, seg));
    const QPoly hq = series::qpoly::gcd(R, series::qpoly::derivative(R));
    const int dh = series::qpoly::degree(hq);
    if (dh <= 0 || 2 * dh != series::qpoly::degree(R) || !series::qpoly::is_squarefree(hq) ||
        series::qpoly::trim(series::qpoly::scale(series::qpoly::mul(hq, hq), R.back())) != R) {
      out.parts.clear();
      return out;
    }
    out.parts.insert(out.parts.end(), static_cast<std::size_t>(dh), b);
  }
  std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
  return out;
}

}  // namespace

std::vector<int> psi_glsp(const std::vector<int>& lambda, std::uint64_t seed, int max_attempts, int precision) {
  if (lambda.empty()) throw DomainError("partition must be nonempty");
  if (precision < 1) throw DomainError("precision must be positive");
  int n = 0;
  for (int m : lambda) {
    if (m < 1) throw DomainError("partition parts must be positive");
    n += m;
  }
  const RationalField Q;
  const QMat N = jordan_nilpotent(Q, lambda, n);
  QMat x = linalg::zeros(Q, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      x(i, j) = N(i, j);
      x(n + i, n + j) = N(j, i);
    }
  // A specialization can only raise the polygon, so the generic polygon is
  // the pointwise lowest one; accept once kAgree samples attain it.
  constexpr int kAgree = 3;
  Rng rng(seed);
  std::vector<GlspSample> seen;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const QMat J = random_self_adjoint(Q, n, rng);
    for (int K = precision; K <= 4 * precision; K *= 2) {
      try {
        GlspSample s = read_charpoly(charpoly(perturb(x, J, K)));
        if (!s.parts.empty()) seen.push_back(std::move(s));
        break;
      } catch (const InsufficientPrecision&) {
      }
    }
    if (seen.empty()) continue;
    std::vector<Rational> low = seen.front().heights;
    for (const auto& s : seen)
      for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], s.heights[i]);
    int agree = 0;
    for (const auto& s : seen) agree += s.heights == low;
    if (agree >= kAgree)
      for (const auto& s : seen)
        if (s.heights == low) return s.parts;
  }
  throw DegenerateSampling("no generic perturbation within " + std::to_string(max_attempts) + " attempts");
}

WClass psi_so(bool x_is_zero, int M, std::uint64_t seed, int max_attempts, int precision) {
  if (M < 2) throw DomainError("psi_so needs M >= 2");
  if (precision < 3) throw DomainError("psi_so needs precision >= 3");
  const int K = precision;
  auto form = [M](const std::vector<Rational>& v, const std::vector<Rational>& w) {
    Rational s = 0;
    for (int j = 0; j < M; ++j) s += (j == M - 1 ? -1 : 1) * v[j] * w[j];
    return s;
  };
  std::vector<Rational> x(M, 0);
  if (!x_is_zero) x[0] = 1, x[M - 1] = 1;
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::vector<Rational>> u(K, std::vector<Rational>(M));
    for (auto& uk : u)
      for (auto& c : uk) c = draw(rng);
    if (x_is_zero ? form(u[0], u[0]) == 0 : form(x, u[0]) == 0) continue;
    // components of x + e X, X = sum_k u_k e^k
    TruncSeries value(K);
    for (int j = 0; j < M; ++j) {
      std::vector<Rational> c(K, 0);
      c[0] = x[j];
      for (int k = 0; k + 1 < K; ++k) c[k + 1] = u[k][j];
      const TruncSeries comp(std::move(c), K);
      value += (comp * comp).scaled(j == M - 1 ? -1 : 1);
    }
    const auto v = value.valuation();
    if (!v) continue;
    return so_class(*v % 2 == 0);
  }
  throw DegenerateSampling("no generic perturbation within " + std::to_string(max_attempts) + " attempts");
}

}  // namespace symspace::psi
