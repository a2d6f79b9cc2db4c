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

#include <complex>

#include <Eigen/Dense>

namespace spinparity {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector3 = Eigen::Vector3d;

/** Pauli matrix sigma_i for i in 1..3; index 0 is the 2x2 identity. */
const Matrix2& pauli(int i);

/** Kronecker product a (x) b, with a acting on the first tensor factor. */
Matrix4 kron(const Matrix2& a, const Matrix2& b);

/** Cached kron(pauli(i), pauli(j)). */
const Matrix4& kron_pauli(int i, int j);

/** Largest entrywise modulus. */
double max_abs(const Matrix4& m);

/** Eigenvalues of a Hermitian matrix, ascending. */
Eigen::Vector4d hermitian_eigenvalues(const Matrix4& m);

/** Re Tr[rho^2]. */
double purity(const Matrix4& rho);

}  // namespace spinparity
