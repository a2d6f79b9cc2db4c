// Copyright 2026 The spinparity developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <string>

#include "spinparity/matrix.hpp"

namespace spinparity {

/**
 * Dirac matrices in the Dirac representation, with the metric signature
 * (+,-,-,-). The first tensor factor carries intrinsic parity and the second
 * carries spin:
 *
 *   gamma^0 = sigma_z (x) 1,    alpha_i = sigma_x (x) sigma_i,
 *   gamma^5 = sigma_x (x) 1,    Sigma_i = 1 (x) sigma_i,
 *   gamma^i = gamma^0 alpha_i.
 */
struct GammaSet {
  Matrix4 identity;
  Matrix4 gamma0;
  std::array<Matrix4, 3> gamma;
  Matrix4 gamma5;
  std::array<Matrix4, 3> alpha;
  std::array<Matrix4, 3> sigma;
};

/** The shared, lazily built set of Dirac matrices. */
const GammaSet& dirac_set();

/** Metric tensor eta^{mu nu} = diag(1,-1,-1,-1). */
double metric(int mu, int nu);

/** gamma^mu for mu in 0..3. */
const Matrix4& gamma_mu(int mu);

/** sigma^{mu nu} = (i/2) [gamma^mu, gamma^nu]. */
Matrix4 sigma_munu(int mu, int nu);

inline constexpr int kBasisSize = 16;

/**
 * Element i of the 16-dimensional trace-orthogonal basis of complex 4x4
 * matrices. The ordering is: the identity, gamma^0..gamma^3, gamma^5,
 * gamma^5 gamma^0..gamma^5 gamma^3, then sigma^{mu nu} for the index pairs
 * (01), (02), (03), (12), (13), (23).
 */
const Matrix4& basis_element(int i);

/** Short printable name of basis element i. */
const std::string& basis_label(int i);

/**
 * Coefficients x_i = Tr[Gamma_i^dagger M] / 4, so that M equals the sum of
 * x_i Gamma_i over the 16 basis elements.
 */
std::array<Complex, kBasisSize> decompose_in_basis(const Matrix4& m);

/** Reassemble a matrix from basis coefficients. */
Matrix4 compose(const std::array<Complex, kBasisSize>& x);

}  // namespace spinparity
