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

#include "spinparity/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "spinparity/errors.hpp"
#include "spinparity/tolerances.hpp"

namespace spinparity {

namespace {

void validate_state(const Matrix4& rho) {
  if (max_abs(rho - rho.adjoint()) > tol::kStateValidation)
    throw NotAState("density matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol::kStateValidation ||
      std::abs(rho.trace().imag()) > tol::kStateValidation)
    throw NotAState("density matrix trace is not one");
}

double bloch_purity(const BlochVectors& b) {
  return 0.25 * (1.0 + b.a1.squaredNorm() + b.a2.squaredNorm() +
                 b.T.squaredNorm());
}

double binary_entropy(double x) {
  double s = 0.0;
  if (x > 0.0 && x < 1.0)
    s = -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
  return s;
}

double entropy_of_eigenvalues(const Eigen::Ref<const Eigen::VectorXd>& ev) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double p = ev[i];
    if (p < tol::kStatePositivity)
      throw NotAState("density matrix has a negative eigenvalue");
    if (p > tol::kEntropyEigenvalueFloor) s -= p * std::log2(p);
  }
  return s;
}

}  // namespace

BlochVectors bloch_decompose(const Matrix4& rho) {
  validate_state(rho);
  BlochVectors b;
  for (int i = 0; i < 3; ++i) {
    b.a1[i] = (rho * kron_pauli(i + 1, 0)).trace().real();
    b.a2[i] = (rho * kron_pauli(0, i + 1)).trace().real();
    for (int j = 0; j < 3; ++j)
      b.T(i, j) = (rho * kron_pauli(i + 1, j + 1)).trace().real();
  }
  return b;
}

Matrix4 bloch_compose(const BlochVectors& b) {
  Matrix4 rho = kron_pauli(0, 0);
  for (int i = 0; i < 3; ++i) {
    rho += b.a1[i] * kron_pauli(i + 1, 0);
    rho += b.a2[i] * kron_pauli(0, i + 1);
    for (int j = 0; j < 3; ++j)
      rho += b.T(i, j) * kron_pauli(i + 1, j + 1);
  }
  return 0.25 * rho;
}

double concurrence_pure(const BlochVectors& b) {
  if (bloch_purity(b) < 1.0 - tol::kPurityForConcurrence)
    throw NotPure("state is not pure");
  if (std::abs(b.a1.squaredNorm() - b.a2.squaredNorm()) >
      tol::kMarginalMatch)
    throw NotPure("marginal Bloch lengths disagree");
  const double rest = std::clamp(1.0 - b.a2.squaredNorm(), 0.0, 1.0);
  return std::sqrt(rest);
}

double concurrence_pure(const Matrix4& rho) {
  return concurrence_pure(bloch_decompose(rho));
}

double concurrence_wootters(const Matrix4& rho) {
  validate_state(rho);
  const Matrix4& yy = kron_pauli(2, 2);
  const Matrix4 flipped = yy * rho.conjugate() * yy;

  Eigen::SelfAdjointEigenSolver<Matrix4> root(rho);
  if (root.info() != Eigen::Success)
    throw NumericalError("state spectrum solver failed");
  if (root.eigenvalues().minCoeff() < tol::kStatePositivity)
    throw NotAState("density matrix has a negative eigenvalue");
  const Matrix4 sqrt_rho =
      root.eigenvectors() *
      root.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
      root.eigenvectors().adjoint();

  // Same nonzero spectrum as rho * flipped, but Hermitian positive, so the
  // spurious zero modes stay at roundoff size instead of being amplified.
  Matrix4 m = sqrt_rho * flipped * sqrt_rho;
  m = 0.5 * (m + m.adjoint().eval());

  Eigen::SelfAdjointEigenSolver<Matrix4> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("spin-flip spectrum solver failed");

  std::array<double, 4> ev;
  double ev_max = 0.0;
  for (int i = 0; i < 4; ++i) {
    ev[i] = solver.eigenvalues()[i];
    ev_max = std::max(ev_max, ev[i]);
  }

  const double floor = tol::kEigenvalueFloorScale *
                       std::numeric_limits<double>::epsilon() *
                       std::max(1.0, ev_max);
  for (double& e : ev) {
    if (e < floor) e = 0.0;
    e = std::sqrt(e);
  }
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return std::max(0.0, ev[0] - ev[1] - ev[2] - ev[3]);
}

double entanglement_of_formation(double concurrence) {
  const double c = std::clamp(concurrence, 0.0, 1.0);
  const double x = 0.5 * (1.0 - std::sqrt(1.0 - c * c));
  return binary_entropy(x);
}

double von_neumann_entropy(const Matrix4& rho) {
  return entropy_of_eigenvalues(hermitian_eigenvalues(rho));
}

double von_neumann_entropy(const Matrix2& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix2> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("Hermitian eigenvalue solver failed");
  return entropy_of_eigenvalues(solver.eigenvalues());
}

Matrix2 reduced_state_1(const Matrix4& rho) {
  Matrix2 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      out(a, b) = rho(2 * a, 2 * b) + rho(2 * a + 1, 2 * b + 1);
  return out;
}

Matrix2 reduced_state_2(const Matrix4& rho) {
  Matrix2 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out(a, b) = rho(a, b) + rho(a + 2, b + 2);
  return out;
}

double geometric_discord(const BlochVectors& b, int side) {
  if (side != 1 && side != 2) throw Error("side must be 1 or 2");
  const Vector3& a = side == 1 ? b.a1 : b.a2;
  Eigen::Matrix3d K = a * a.transpose();
  if (side == 1)
    K += b.T * b.T.transpose();
  else
    K += b.T.transpose() * b.T;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(
      K, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("Hermitian eigenvalue solver failed");
  const double k_max = solver.eigenvalues().maxCoeff();
  return 0.25 * (a.squaredNorm() + b.T.squaredNorm() - k_max);
}

CorrelationReport full_report(const Matrix4& rho) {
  const BlochVectors b = bloch_decompose(rho);
  CorrelationReport r;
  r.concurrence = concurrence_wootters(rho);
  r.eof = entanglement_of_formation(r.concurrence);
  r.entropy_total = von_neumann_entropy(rho);
  r.entropy_sub1 = von_neumann_entropy(reduced_state_1(rho));
  r.entropy_sub2 = von_neumann_entropy(reduced_state_2(rho));
  r.discord_geo_1 = geometric_discord(b, 1);
  r.discord_geo_2 = geometric_discord(b, 2);
  r.purity = purity(rho);
  return r;
}

}  // namespace spinparity
