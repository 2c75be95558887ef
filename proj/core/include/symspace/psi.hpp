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

#include <cstdint>
#include <string>
#include <vector>

#include "symspace/outcome.hpp"
#include "symspace/series.hpp"

namespace symspace::psi {

enum class Family { gl22, glsp, so };

// Conjugacy class of the little Weyl group: gamma_1..gamma_5 for the
// dihedral group of order 8, a partition for S_n, a parity for Z/2.
struct WClass {
  Family family = Family::gl22;
  std::string label;
  friend bool operator==(const WClass&, const WClass&) = default;
};

WClass gamma(int j);
WClass so_class(bool even);
WClass partition_class(const std::vector<int>& lambda);

// Eigenvalue data of X^2 - t X + d over Q((e)): valuations from the Newton
// polygon, membership of the roots in Q((e)) from the parity of v(t^2 - 4d).
WClass classify_quadratic(const series::TruncSeries& t, const series::TruncSeries& d);

// Sampled perturbation xi = (a, b, c, d; x, y, z, u) in the tabulated basis:
// e1 -> a e3 + b e4, e2 -> c e3 + d e4, e3 -> x e1 + y e2, e4 -> z e1 + u e2.
struct Xi {
  // coefficient lists, index = power of e
  std::vector<Rational> a, b, c, d, x, y, z, u;
};

struct Gl22Sample {
  Xi xi;
  series::TruncSeries t;
  series::TruncSeries d;
  int attempts = 0;
  int precision = 0;
  WClass cls;
};

struct Gl22Options {
  std::uint64_t seed = 0;
  // Conjugate N_i by a random (g, h) in GL_2(Q) x GL_2(Q) before perturbing.
  bool conjugate = false;
  int max_attempts = 50;
  // Starting precision; doubled once on insufficient precision.
  int precision = series::kDefaultPrecision;
};

// Samples xi with the genericity conditions for N_i, forms the
// characteristic polynomial of A_i B_i for (A_i, B_i) = N_i + e xi and
// classifies it.
Gl22Sample sample_gl22(int i, const Gl22Options& opts);
WClass psi_gl22(int i, std::uint64_t seed);
// Class listed for N_i: gamma_4, gamma_2, gamma_3 or gamma_1.
WClass tabulated_psi_gl22(int i);

// Checks every displayed coefficient of P_i (including the vanishing orders
// implied by the O(e^m) terms) at one sampled xi. A mismatch whose computed
// value is the negative of the displayed one is recorded as a sign flip.
Outcome verify_Pi(int i, std::uint64_t seed);

// Partition read off from charpoly(x + e J) for x nilpotent of pair type
// lambda in the self-adjoint space and J random in the same space.
std::vector<int> psi_glsp(const std::vector<int>& lambda, std::uint64_t seed, int max_attempts = 50,
                          int precision = series::kDefaultPrecision);

// Parity class of v((x + e X, x + e X)) for x = 0 or x nonzero isotropic.
WClass psi_so(bool x_is_zero, int M, std::uint64_t seed, int max_attempts = 50,
              int precision = series::kDefaultPrecision);

// Characteristic polynomial det(X I - A) over truncated series, low degree first.
std::vector<series::TruncSeries> charpoly(const std::vector<std::vector<series::TruncSeries>>& A);

}  // namespace symspace::psi
