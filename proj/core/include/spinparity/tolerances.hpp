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

namespace spinparity::tol {

/** Entrywise bound under which the correction operator counts as zero. */
inline constexpr double kMixedOperatorNorm = 1e-12;

/** c2 must exceed this for the pure-projector branch to be meaningful. */
inline constexpr double kPureC2Floor = 1e-12;

/**
 * Entrywise bound on O^2 - c2, relative to max(1, c2), under which the
 * correction operator counts as squaring to a scalar.
 */
inline constexpr double kPureConditionScale = 1e-10;

/** lambda^2 at or below this is treated as a degenerate branch crossing. */
inline constexpr double kDegenerateRadicand = 1e-14;

/** Hermiticity and unit-trace bound for density-matrix validation. */
inline constexpr double kStateValidation = 1e-10;

/** Allowed purity deficit 1 - Tr[rho^2] in pure-state formulas. */
inline constexpr double kPurityForConcurrence = 1e-8;

/** Allowed mismatch between the two squared marginal Bloch lengths. */
inline constexpr double kMarginalMatch = 1e-8;

/**
 * Multiple of machine epsilon below which spin-flip spectrum eigenvalues are
 * flushed to zero before taking square roots. The flush threshold is
 * kEigenvalueFloorScale * eps * max(1, largest eigenvalue), an absolute floor
 * for density matrices, whose spin-flip spectrum never exceeds one.
 */
inline constexpr double kEigenvalueFloorScale = 100.0;

/** Eigenvalues at or below this are excluded from entropy sums. */
inline constexpr double kEntropyEigenvalueFloor = 1e-14;

/** Most negative admissible eigenvalue of a density matrix. */
inline constexpr double kStatePositivity = -1e-10;

/** Scale of the applicability checks guarding closed-form case formulas. */
inline constexpr double kScenarioConstraint = 1e-10;

}  // namespace spinparity::tol
