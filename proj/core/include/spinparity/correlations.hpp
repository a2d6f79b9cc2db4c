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

#include "spinparity/matrix.hpp"

namespace spinparity {

/**
 * Bloch representation of a two-qubit state,
 *
 *   rho = (1/4) (1 + a1.sigma (x) 1 + 1 (x) a2.sigma
 *                + sum_ij T_ij sigma_i (x) sigma_j),
 *
 * where factor 1 is intrinsic parity and factor 2 is spin.
 */
struct BlochVectors {
  Vector3 a1;
  Vector3 a2;
  Eigen::Matrix3d T;
};

/** Extract Bloch vectors and correlation tensor. Validates the state. */
BlochVectors bloch_decompose(const Matrix4& rho);

/** Rebuild the density matrix from its Bloch representation. */
Matrix4 bloch_compose(const BlochVectors& b);

/**
 * Concurrence of a pure two-qubit state from its spin Bloch vector,
 * C = sqrt(1 - a2^2). Throws NotPure when the state is visibly mixed or the
 * two marginal Bloch lengths disagree.
 */
double concurrence_pure(const BlochVectors& b);
double concurrence_pure(const Matrix4& rho);

/**
 * Concurrence of an arbitrary two-qubit state from the spectrum of
 * rho (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y). Eigenvalues below
 * the numerical noise floor are flushed to zero before the square roots.
 */
double concurrence_wootters(const Matrix4& rho);

/**
 * Entanglement of formation as a function of the concurrence, the base-2
 * binary entropy of (1 - sqrt(1 - C^2)) / 2.
 */
double entanglement_of_formation(double concurrence);

/** Von Neumann entropy in bits. Eigenvalues near zero are excluded. */
double von_neumann_entropy(const Matrix4& rho);
double von_neumann_entropy(const Matrix2& rho);

/** Reduced state of factor 1 (intrinsic parity), tracing out factor 2. */
Matrix2 reduced_state_1(const Matrix4& rho);

/** Reduced state of factor 2 (spin), tracing out factor 1. */
Matrix2 reduced_state_2(const Matrix4& rho);

/**
 * Geometric quantum discord with respect to measurements on the given side
 * (1 or 2),
 *
 *   D = (1/4) (a^2 + |T|^2 - k_max),
 *
 * where a is that side's Bloch vector, |T| the Frobenius norm of the
 * correlation tensor, and k_max the largest eigenvalue of a a^T + T T^T for
 * side 1 or of a a^T + T^T T for side 2.
 */
double geometric_discord(const BlochVectors& b, int side);

/** Every correlation measure computed by full_report. */
struct CorrelationReport {
  double concurrence;
  double eof;
  double entropy_total;
  double entropy_sub1;
  double entropy_sub2;
  double discord_geo_1;
  double discord_geo_2;
  double purity;
};

/** Compute all supported measures of a two-qubit state. */
CorrelationReport full_report(const Matrix4& rho);

}  // namespace spinparity
