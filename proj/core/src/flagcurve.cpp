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

#include "symspace/flagcurve.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symspace/errors.hpp"
#include "symspace/parallel.hpp"

namespace symspace::flagcurve {

using gf::FieldCtx;
using gf::FqElem;
using gf::PolyFp;
using Vec3 = std::array<FqElem, 3>;

namespace {

int md(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

}  // namespace

namespace mat3 {

Mat3 identity() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 diag(int a, int b, int c, int p) { return {{{md(a, p), 0, 0}, {0, md(b, p), 0}, {0, 0, md(c, p)}}}; }

Mat3 scalar(int c, int p) { return diag(c, c, c, p); }

Mat3 mul(const Mat3& a, const Mat3& b, int p) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long long s = 0;
      for (int k = 0; k < 3; ++k) s += static_cast<long long>(a[i][k]) * b[k][j];
      r[i][j] = md(s, p);
    }
  return r;
}

Mat3 transpose(const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

int det(const Mat3& a, int p) {
  const long long d = static_cast<long long>(a[0][0]) * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                      static_cast<long long>(a[0][1]) * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                      static_cast<long long>(a[0][2]) * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  return md(d, p);
}

Mat3 inverse(const Mat3& a, int p) {
  const int d = det(a, p);
  if (d == 0) throw DomainError("singular 3x3 matrix");
  const int di = gf::modinv(d, p);
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      const long long cof = static_cast<long long>(a[r0][c0]) * a[r1][c1] - static_cast<long long>(a[r0][c1]) * a[r1][c0];
      r[i][j] = md(md(cof, p) * static_cast<long long>(di), p);
    }
  return r;
}

}  // namespace mat3

Quadric3 make_quadric(int p, const Mat3& gram) {
  if (p == 2) throw UnsupportedCharacteristic("orthogonal geometry in characteristic 2 is not supported");
  if (p < 2 || !gf::is_prime(static_cast<std::uint64_t>(p))) throw DomainError("flag curve needs an odd prime");
  Quadric3 Q{p, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Q.gram[i][j] = md(gram[i][j], p);
  if (Q.gram != mat3::transpose(Q.gram)) throw DomainError("gram matrix is not symmetric");
  if (mat3::det(Q.gram, p) == 0) throw DomainError("quadratic form is degenerate");
  return Q;
}

Quadric3 standard_quadric(int p) { return make_quadric(p, mat3::diag(1, 1, -1, p)); }

namespace {

using EMat = std::array<std::array<FqElem, 3>, 3>;

EMat embed(const FieldCtx& F, const Mat3& m) {
  if (F.p() == 0) throw std::logic_error("field without characteristic");
  EMat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = F.from_int(m[i][j]);
  return r;
}

FqElem qform(const FieldCtx& F, const EMat& M, const Vec3& v) {
  FqElem s = F.zero();
  for (int i = 0; i < 3; ++i) {
    if (F.is_zero(v[i])) continue;
    FqElem row = F.zero();
    for (int j = 0; j < 3; ++j) row = F.add(row, F.mul(M[i][j], v[j]));
    s = F.add(s, F.mul(v[i], row));
  }
  return s;
}

FqElem bform(const FieldCtx& F, const EMat& M, const Vec3& v, const Vec3& w) {
  FqElem s = F.zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = F.add(s, F.mul(v[i], F.mul(M[i][j], w[j])));
  return s;
}

Vec3 apply(const FieldCtx& F, const EMat& M, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i) {
    r[i] = F.zero();
    for (int j = 0; j < 3; ++j) r[i] = F.add(r[i], F.mul(M[i][j], v[j]));
  }
  return r;
}

Vec3 normalize(const FieldCtx& F, Vec3 v) {
  for (int i = 0; i < 3; ++i)
    if (!F.is_zero(v[i])) {
      const FqElem s = F.inv(v[i]);
      for (auto& x : v) x = F.mul(x, s);
      return v;
    }
  throw std::logic_error("zero vector has no projective point");
}

struct Embedded {
  EMat gram, dual;
};

Embedded embed_quadric(const FieldCtx& F, const Quadric3& Q) {
  return {embed(F, Q.gram), embed(F, mat3::inverse(Q.gram, Q.p))};
}

int label(bool line_in_Q, bool plane_in_Qdual) { return line_in_Q ? (plane_in_Qdual ? 0 : 1) : (plane_in_Qdual ? 2 : 3); }

int orbit_fast(const FieldCtx& F, const Embedded& E, const Flag3& fl) {
  return label(F.is_zero(qform(F, E.gram, fl.line)), F.is_zero(qform(F, E.dual, fl.plane)));
}

Vec3 point_at(const FieldCtx& F, std::uint64_t i) {
  const std::uint64_t q = F.q();
  if (i < q * q) return {F.one(), F.element(static_cast<std::uint32_t>(i / q)), F.element(static_cast<std::uint32_t>(i % q))};
  if (i < q * q + q) return {F.zero(), F.one(), F.element(static_cast<std::uint32_t>(i - q * q))};
  return {F.zero(), F.zero(), F.one()};
}

// Basis (u, v) of the planes through the normalized point l; the pencil is
// u + c v (c in F) together with v.
std::pair<Vec3, Vec3> pencil(const FieldCtx& F, const Vec3& l) {
  int k = 0;
  while (F.is_zero(l[k])) ++k;
  std::array<Vec3, 2> b{};
  int n = 0;
  for (int j = 0; j < 3; ++j) {
    if (j == k) continue;
    Vec3 w{F.zero(), F.zero(), F.zero()};
    w[j] = F.one();
    w[k] = F.neg(F.div(l[j], l[k]));
    b[n++] = w;
  }
  return {b[0], b[1]};
}

Vec3 combine(const FieldCtx& F, const Vec3& u, FqElem c, const Vec3& v) {
  return {F.add(u[0], F.mul(c, v[0])), F.add(u[1], F.mul(c, v[1])), F.add(u[2], F.mul(c, v[2]))};
}

// Rational parametrization of the conic with gram G over F_p: a point p0 and
// a complement (a, b), x(s, t) = -Q(w) p0 + 2 B(p0, w) w with w = s a + t b.
struct Param {
  std::array<int, 3> p0{}, a{}, b{};
};

Param parametrize(int p, const Mat3& G) {
  auto q = [&](const std::array<int, 3>& x, const std::array<int, 3>& y) {
    long long s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += static_cast<long long>(x[i]) * G[i][j] % p * y[j];
    return md(s, p);
  };
  Param P;
  bool found = false;
  for (int i = 0; i < p * p + p + 1 && !found; ++i) {
    std::array<int, 3> x = i < p * p ? std::array<int, 3>{1, i / p, i % p}
                                     : (i < p * p + p ? std::array<int, 3>{0, 1, i - p * p} : std::array<int, 3>{0, 0, 1});
    if (q(x, x) == 0) P.p0 = x, found = true;
  }
  if (!found) throw DomainError("conic has no rational point");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      std::array<int, 3> a{}, b{};
      a[i] = 1, b[j] = 1;
      const Mat3 m{{P.p0, a, b}};
      if (mat3::det(m, p) != 0) {
        P.a = a, P.b = b;
        return P;
      }
    }
  throw std::logic_error("no complement to a nonzero vector");
}

// Components of x(s, 1) as polynomials in s over F_p.
std::array<PolyFp, 3> param_polys(int p, const Mat3& G, const Param& P) {
  auto q = [&](const std::array<int, 3>& x, const std::array<int, 3>& y) {
    long long s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += static_cast<long long>(x[i]) * G[i][j] % p * y[j];
    return md(s, p);
  };
  const long long qa = q(P.a, P.a), qab = q(P.a, P.b), qb = q(P.b, P.b), ba = q(P.p0, P.a), bb = q(P.p0, P.b);
  std::array<PolyFp, 3> x;
  for (int k = 0; k < 3; ++k)
    x[k] = gf::poly::trim({md(-qb * P.p0[k] + 2 * bb * P.b[k], p),
                           md(-2 * qab * P.p0[k] + 2 * ba * P.b[k] + 2 * bb * P.a[k], p),
                           md(-qa * P.p0[k] + 2 * ba * P.a[k], p)});
  return x;
}

}  // namespace

int orbit_of(const FieldCtx& F, const Quadric3& Q, const Flag3& fl) { return orbit_fast(F, embed_quadric(F, Q), fl); }

Flag3 translate(const FieldCtx& F, const Mat3& g, const Flag3& fl) {
  const int p = F.p();
  const EMat G = embed(F, g), Git = embed(F, mat3::transpose(mat3::inverse(g, p)));
  return {apply(F, G, fl.line), apply(F, Git, fl.plane)};
}

Mat3 random_gl3(int p, Rng& rng) {
  for (;;) {
    Mat3 g{};
    for (auto& row : g)
      for (auto& x : row) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(p)));
    if (mat3::det(g, p) != 0) return g;
  }
}

Mat3 random_orthogonal(const Quadric3& Q, Rng& rng, int reflections) {
  const int p = Q.p;
  Mat3 h = mat3::identity();
  for (int r = 0; r < reflections; ++r) {
    std::array<int, 3> v{};
    long long qv = 0;
    std::array<long long, 3> Gv{};
    do {
      for (auto& x : v) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(p)));
      for (int i = 0; i < 3; ++i) {
        Gv[i] = 0;
        for (int j = 0; j < 3; ++j) Gv[i] += static_cast<long long>(Q.gram[i][j]) * v[j];
        Gv[i] = md(Gv[i], p);
      }
      qv = md(static_cast<long long>(v[0]) * Gv[0] + static_cast<long long>(v[1]) * Gv[1] + static_cast<long long>(v[2]) * Gv[2], p);
    } while (qv == 0);
    // x -> x - 2 (x, v) / (v, v) v
    const long long c = md(2LL * gf::modinv(static_cast<int>(qv), p), p);
    Mat3 s = mat3::identity();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s[i][j] = md(s[i][j] - c * v[i] % p * Gv[j], p);
    h = mat3::mul(s, h, p);
  }
  return h;
}

std::uint64_t ConicPair::count(int m) const {
  if (!squarefree) throw DomainError("intersection is not reduced");
  std::uint64_t n = 0;
  for (int d : factor_degrees)
    if (m % d == 0) n += static_cast<std::uint64_t>(d);
  return n;
}

int ConicPair::splitting_degree() const {
  if (!squarefree) throw DomainError("intersection is not reduced");
  int l = 1;
  for (int d : factor_degrees) l = std::lcm(l, d);
  return l;
}

ConicPair intersect_conics(int p, const Mat3& G1, const Mat3& G2) {
  if (mat3::det(G1, p) == 0) throw DomainError("first conic is degenerate");
  const auto x = param_polys(p, G1, parametrize(p, G1));
  PolyFp F;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      if (G2[k][l] != 0) F = gf::poly::add(F, gf::poly::scale(gf::poly::mul(x[k], x[l], p), G2[k][l], p), p);
  ConicPair out;
  out.p = p;
  out.quartic = gf::poly::trim(F);
  out.identical = out.quartic.empty();
  const int deg = gf::poly::degree(out.quartic);
  out.squarefree = !out.identical && deg >= 3 && gf::poly::is_squarefree(out.quartic, p);
  if (out.squarefree) {
    out.factor_degrees = gf::poly::factor_degrees(out.quartic, p);
    if (deg == 3) out.factor_degrees.push_back(1);
    std::sort(out.factor_degrees.begin(), out.factor_degrees.end());
  }
  return out;
}

ConicPair point_intersection(const Quadric3& Q, const Mat3& g) {
  const Mat3 gi = mat3::inverse(g, Q.p);
  return intersect_conics(Q.p, Q.gram, mat3::mul(mat3::transpose(gi), mat3::mul(Q.gram, gi, Q.p), Q.p));
}

ConicPair tangent_intersection(const Quadric3& Q, const Mat3& g) {
  const Mat3 dual = mat3::inverse(Q.gram, Q.p);
  return intersect_conics(Q.p, dual, mat3::mul(g, mat3::mul(dual, mat3::transpose(g), Q.p), Q.p));
}

bool general_position(const Quadric3& Q, const Mat3& g) {
  const ConicPair c = point_intersection(Q, g);
  if (!c.squarefree) return false;
  bool reaches = false;
  for (int m = 1; m <= 12; ++m) {
    const auto n = c.count(m);
    if (n > 4) return false;
    reaches = reaches || n == 4;
  }
  return reaches;
}

std::optional<Mat3> find_general_position(const Quadric3& Q, std::uint64_t seed, int max_tries) {
  Rng rng(seed);
  for (int i = 0; i < max_tries; ++i) {
    const Mat3 g = random_gl3(Q.p, rng);
    if (general_position(Q, g)) return g;
  }
  return std::nullopt;
}

std::vector<Vec3> conic_points(const FieldCtx& F, const Mat3& G) {
  const int p = F.p();
  const Param P = parametrize(p, G);
  const auto x = param_polys(p, G, P);
  std::array<std::array<FqElem, 3>, 3> coef{};  // coef[k][e] = coefficient of s^e in x_k
  for (int k = 0; k < 3; ++k)
    for (int e = 0; e < 3; ++e) coef[k][e] = F.from_int(e < static_cast<int>(x[k].size()) ? x[k][e] : 0);
  std::vector<Vec3> out;
  out.reserve(F.q() + 1);
  for (std::uint32_t i = 0; i < F.q(); ++i) {
    const FqElem s = F.element(i);
    Vec3 v{};
    for (int k = 0; k < 3; ++k) v[k] = F.add(coef[k][0], F.mul(s, F.add(coef[k][1], F.mul(s, coef[k][2]))));
    out.push_back(normalize(F, v));
  }
  // s = infinity
  out.push_back(normalize(F, {coef[0][2], coef[1][2], coef[2][2]}));
  return out;
}

std::uint64_t count_common_points(const FieldCtx& F, const Mat3& G1, const Mat3& G2) {
  const EMat A = embed(F, G1), B = embed(F, G2);
  const std::uint64_t q = F.q(), total = q * q + q + 1;
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    const Vec3 v = point_at(F, i);
    if (F.is_zero(qform(F, A, v)) && F.is_zero(qform(F, B, v))) ++n;
  }
  return n;
}

namespace {

std::unique_ptr<FieldCtx> extension(int p, int m) {
  if (m < 1) throw DomainError("extension degree must be positive");
  std::uint64_t size = 1;
  for (int i = 0; i < m; ++i) {
    size *= static_cast<std::uint64_t>(p);
    if (size > (1u << 24)) throw BudgetExceeded("extension field too large for table arithmetic");
  }
  return std::make_unique<FieldCtx>(p, m);
}

}  // namespace

Table4 count_Eij(const Quadric3& Q, const Mat3& g, int m, std::uint64_t budget) {
  const auto F = extension(Q.p, m);
  const std::uint64_t q = F->q(), points = q * q + q + 1;
  if (points * (q + 1) > budget) throw BudgetExceeded("flag enumeration over F_" + std::to_string(q) + " exceeds budget");
  const Embedded E = embed_quadric(*F, Q);
  const Mat3 gi = mat3::inverse(g, Q.p);
  const EMat Gi = embed(*F, gi), Gt = embed(*F, mat3::transpose(g));
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(points, 4 * thread_count()));
  std::vector<Table4> partial(chunks, Table4{});
  parallel_for(chunks, [&](std::size_t c) {
    for (std::uint64_t i = c; i < points; i += chunks) {
      const Vec3 l = point_at(*F, i);
      const auto [u, v] = pencil(*F, l);
      for (std::uint64_t k = 0; k <= q; ++k) {
        const Vec3 n = k < q ? combine(*F, u, F->element(static_cast<std::uint32_t>(k)), v) : v;
        const Flag3 fl{l, n};
        // (L, P) in g O_j iff g^-1 (L, P) in O_j; g^-1 sends the normal n to g^T n.
        const Flag3 back{apply(*F, Gi, l), apply(*F, Gt, n)};
        ++partial[c][orbit_fast(*F, E, fl)][orbit_fast(*F, E, back)];
      }
    }
  });
  Table4 t{};
  for (const auto& pt : partial)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[i][j] += pt[i][j];
  return t;
}

CurveCount count_E(const Quadric3& Q, const Mat3& g, int m, std::uint64_t budget) {
  const auto F = extension(Q.p, m);
  const int p = Q.p;
  if (F->q() + 1 > budget) throw BudgetExceeded("curve enumeration exceeds budget");
  const Embedded E = embed_quadric(*F, Q);
  const Mat3 gi = mat3::inverse(g, p);
  const Mat3 dual = mat3::inverse(Q.gram, p);
  const EMat H = embed(*F, mat3::mul(g, mat3::mul(dual, mat3::transpose(g), p), p));             // gQ'
  const EMat Gg = embed(*F, mat3::mul(mat3::transpose(gi), mat3::mul(Q.gram, gi, p), p));        // gQ
  CurveCount out;
  out.m = m;
  for (const Vec3& l : conic_points(*F, Q.gram)) {
    // Planes through L tangent to gQ: zeros of H on the pencil u + c v, v.
    const auto [u, v] = pencil(*F, l);
    const FqElem alpha = qform(*F, H, u), beta = bform(*F, H, u, v), gam = qform(*F, H, v);
    std::vector<Vec3> planes;
    if (!F->is_zero(gam)) {
      const FqElem disc = F->sub(F->mul(beta, beta), F->mul(alpha, gam));
      if (const auto r = F->sqrt(disc)) {
        const FqElem gi_ = F->inv(gam);
        planes.push_back(combine(*F, u, F->mul(F->sub(F->neg(beta), *r), gi_), v));
        if (!F->is_zero(*r)) planes.push_back(combine(*F, u, F->mul(F->add(F->neg(beta), *r), gi_), v));
      }
    } else {
      planes.push_back(v);
      if (!F->is_zero(beta)) {
        planes.push_back(combine(*F, u, F->neg(F->div(alpha, F->add(beta, beta))), v));
      } else if (F->is_zero(alpha)) {
        throw std::logic_error("every plane through a point is tangent to a nondegenerate conic");
      }
    }
    ++out.fibres.at(planes.size());
    const bool l_in_gQ = F->is_zero(qform(*F, Gg, l));
    for (const Vec3& n : planes) {
      const bool p_in_Qdual = F->is_zero(qform(*F, E.dual, n));
      ++out.total;
      if (p_in_Qdual && l_in_gQ) ++out.e00;
      else if (p_in_Qdual) ++out.e02;
      else if (l_in_gQ) ++out.e10;
      else ++out.e12;
    }
  }
  return out;
}

Outcome elliptic_fingerprint(const Quadric3& Q, const Mat3& g) {
  Outcome out;
  const long long q = Q.p;
  const long long N1 = static_cast<long long>(count_E(Q, g, 1).total);
  const long long N2 = static_cast<long long>(count_E(Q, g, 2).total);
  const long long a = q + 1 - N1;
  out.expect(a * a <= 4 * q, "Hasse bound", "a^2 <= " + std::to_string(4 * q), "a^2 = " + std::to_string(a * a));
  const long long predicted = q * q + 1 - (a * a - 2 * q);
  out.expect(N2 == predicted, "N_2", std::to_string(predicted), std::to_string(N2));
  out.fact("q", std::to_string(q));
  out.fact("N1", std::to_string(N1));
  out.fact("N2", std::to_string(N2));
  out.fact("a", std::to_string(a));
  return out;
}

Outcome verify_pieces(const Quadric3& Q, const Mat3& g, std::uint64_t budget) {
  Outcome out;
  out.expect(general_position(Q, g), "general position", "true", "false");
  if (!out.passed) return out;
  const ConicPair pts = point_intersection(Q, g), tan = tangent_intersection(Q, g);
  const int m_pts = pts.splitting_degree(), m_tan = tan.splitting_degree();
  out.fact("split_points", std::to_string(m_pts));
  out.fact("split_tangents", std::to_string(m_tan));
  const int top = std::max({4, m_pts, m_tan});
  for (int m = 1; m <= top; ++m) {
    CurveCount c;
    try {
      c = count_E(Q, g, m, budget);
    } catch (const BudgetExceeded&) {
      out.fact("skipped_m", std::to_string(m));
      continue;
    }
    const std::string at = " over F_" + std::to_string(Q.p) + "^" + std::to_string(m);
    const std::uint64_t conic = c.fibres[0] + c.fibres[1] + c.fibres[2];
    out.expect(c.e00 == 0, "E00" + at, "0", std::to_string(c.e00));
    out.expect(c.e02 == tan.count(m), "E02" + at, std::to_string(tan.count(m)), std::to_string(c.e02));
    out.expect(c.e10 == pts.count(m), "E10" + at, std::to_string(pts.count(m)), std::to_string(c.e10));
    out.expect(c.fibres[1] == pts.count(m), "branch points" + at, std::to_string(pts.count(m)), std::to_string(c.fibres[1]));
    out.expect(c.total == c.fibres[1] + 2 * c.fibres[2], "fibre sum" + at, std::to_string(c.total),
               std::to_string(c.fibres[1] + 2 * c.fibres[2]));
    std::uint64_t qm = 1;
    for (int i = 0; i < m; ++i) qm *= static_cast<std::uint64_t>(Q.p);
    out.expect(conic == qm + 1, "conic points" + at, std::to_string(qm + 1), std::to_string(conic));
    if (m == m_tan) out.expect(c.e02 == 4, "E02 over splitting field", "4", std::to_string(c.e02));
    if (m == m_pts) {
      out.expect(c.e10 == 4, "E10 over splitting field", "4", std::to_string(c.e10));
      out.expect(c.fibres[1] == 4, "branch points over splitting field", "4", std::to_string(c.fibres[1]));
    }
  }
  return out;
}

}  // namespace symspace::flagcurve
