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

#include "spinparity/potentials.hpp"

namespace spinparity {

/**
 * Classification of the stationary density-matrix family supported by a
 * field configuration.
 *
 * MixedRank2: the correction operator vanishes, the state is the rank-2
 * projection onto one energy branch. PureProjector: the correction operator
 * squares to c2 > 0 times the identity, the state is a rank-1 projector.
 * Unsupported: neither holds, no stationary state of this form exists.
 */
enum class PurityClass { PureProjector, MixedRank2, Unsupported };

/** Classify the configuration held by the given Hamiltonian. */
PurityClass purity_condition(const DiracHamiltonian& h);

/**
 * Stationary eigenvalue lambda = (-1)^n sqrt(c1 + 2 (-1)^s sqrt(c2)) with
 * s, n in {1, 2}. Throws DegenerateEnergy when the radicand vanishes.
 */
double eigenvalue_lambda(double c1, double c2, int s, int n);

/** A stationary state of the shifted Hamiltonian. */
struct StationaryState {
  Matrix4 rho;
  double lambda;
  double c1;
  double c2;
  PurityClass purity;
  int s;
  int n;
};

/**
 * The stationary density matrix
 *
 *   rho = (1/4) (1 + (-1)^s O / sqrt(c2)) (1 + (-1)^n H / |lambda|),
 *
 * reducing to rho = (1/4) (1 + (-1)^n H / |lambda|) when the correction
 * operator O vanishes. It commutes with H and satisfies Tr[H rho] = lambda.
 * Throws UnsupportedConfiguration or DegenerateEnergy when no such state
 * exists, and ConfigError when s or n is not 1 or 2.
 */
StationaryState build_state(const DiracHamiltonian& h, int s, int n);

}  // namespace spinparity
