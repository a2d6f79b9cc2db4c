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

#include "spinparity/matrix.hpp"

#include <array>

#include "spinparity/errors.hpp"

namespace spinparity {

namespace {

std::array<Matrix2, 4> make_pauli() {
  const Complex i(0.0, 1.0);
  std::array<Matrix2, 4> p;
  p[0] << 1, 0, 0, 1;
  p[1] << 0, 1, 1, 0;
  p[2] << 0, -i, i, 0;
  p[3] << 1, 0, 0, -1;
  return p;
}

}  // namespace

const Matrix2& pauli(int i) {
  static const std::array<Matrix2, 4> table = make_pauli();
  if (i < 0 || i > 3) throw Error("pauli index out of range");
  return table[i];
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
  return out;
}

const Matrix4& kron_pauli(int i, int j) {
  static const std::array<Matrix4, 16> table = [] {
    std::array<Matrix4, 16> t;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[4 * a + b] = kron(pauli(a), pauli(b));
    return t;
  }();
  if (i < 0 || i > 3 || j < 0 || j > 3) throw Error("pauli index out of range");
  return table[4 * i + j];
}

double max_abs(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::Vector4d hermitian_eigenvalues(const Matrix4& m) {
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("Hermitian eigenvalue solver failed");
  return solver.eigenvalues();
}

double purity(const Matrix4& rho) { return (rho * rho).trace().real(); }

}  // namespace spinparity
