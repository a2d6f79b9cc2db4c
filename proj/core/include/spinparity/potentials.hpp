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

#include "spinparity/clifford.hpp"

namespace spinparity {

/** The six Poincare classes of static external potentials. */
enum class PotentialClass {
  Scalar,
  Pseudoscalar,
  Vector,
  Pseudovector,
  Tensor,
  Pseudotensor
};

/**
 * A uniform field configuration for a single Dirac particle. All couplings
 * default to zero. Derived combinations used throughout the library:
 *
 *   effective mass     m + phi_S,
 *   kinetic momentum   P = p - A,
 *   u = chi B + kappa E,
 *   v = kappa B - chi E.
 */
struct FieldConfig {
  double m = 0.0;      // rest mass
  double phi_S = 0.0;  // scalar potential
  double mu = 0.0;     // pseudoscalar coupling
  double q = 0.0;      // time component of the pseudovector potential
  double kappa = 0.0;  // tensor coupling
  double chi = 0.0;    // pseudotensor coupling
  double A0 = 0.0;     // time component of the vector potential

  Vector3 A = Vector3::Zero();  // space components of the vector potential
  Vector3 p = Vector3::Zero();  // canonical momentum
  Vector3 W = Vector3::Zero();  // space components of the pseudovector potential
  Vector3 B = Vector3::Zero();  // magnetic field
  Vector3 E = Vector3::Zero();  // electric field

  double effective_mass() const { return m + phi_S; }
  Vector3 kinetic_momentum() const { return p - A; }
  Vector3 u() const { return chi * B + kappa * E; }
  Vector3 v() const { return kappa * B - chi * E; }
};

/**
 * The potential operator U of the given class as it enters the covariant
 * equation, built from products of gamma matrices. The tensor and
 * pseudotensor entries contract sigma^{mu nu} with the field strength
 * F_{mu nu} assembled from E and B.
 */
Matrix4 covariant_potential(PotentialClass c, const FieldConfig& f);

/**
 * gamma^0 U written out in terms of gamma^0, gamma^5, alpha_i and gamma^i,
 * the form the potential takes inside the Hamiltonian.
 */
Matrix4 dirac_potential(PotentialClass c, const FieldConfig& f);

/**
 * The same Hamiltonian-form potential assembled directly from Pauli
 * Kronecker products, with no reference to the gamma matrices.
 */
Matrix4 su2su2_potential(PotentialClass c, const FieldConfig& f);

/** A Dirac Hamiltonian together with the configuration that produced it. */
struct DiracHamiltonian {
  Matrix4 matrix;
  FieldConfig config;
  bool includes_A0;
};

/**
 * H = A0 + gamma^0 (m + phi_S) + alpha.(p - A) + i gamma^0 gamma^5 mu
 *     - gamma^5 q + gamma^5 alpha.W + i gamma.u + gamma^5 gamma.v.
 *
 * By default the uniform A0 shift is removed, which makes the matrix
 * traceless; pass subtract_A0 = false to keep it.
 */
DiracHamiltonian build_hamiltonian(const FieldConfig& f,
                                   bool subtract_A0 = true);

/** Independent construction of the same matrix from Pauli Kronecker products. */
Matrix4 su2su2_hamiltonian(const FieldConfig& f, bool subtract_A0 = true);

/**
 * Scalar and vector invariants of the shifted Hamiltonian. With
 * P, u, v as in FieldConfig and M = m + phi_S:
 *
 *   d1 = mu u - M v - q P,        d2 = M W + P x u,
 *   d3 = mu W + P x v,            d4 = -q W - u x v,
 *
 *   c1 = P^2 + M^2 + mu^2 + q^2 + W^2 + u^2 + v^2,
 *   c2 = d1^2 + d2^2 + d3^2 + d4^2 + (P.W)^2 + (W.u)^2 + (W.v)^2,
 *   delta = mu (W.u) - M (W.v) - q (P.W) - (u x v).P.
 *
 * They satisfy H^2 = c1 + 2 O and O^2 = c2 + 2 delta H for the shifted
 * Hamiltonian H and the correction operator O of build_O.
 */
struct Invariants {
  double c1;
  double c2;
  double delta;
  Vector3 d1, d2, d3, d4;
  double pw, wu, wv;  // P.W, W.u, W.v
};

/** Invariants evaluated from the closed formulas above. */
Invariants closed_invariants(const FieldConfig& f);

/**
 * Invariants with c1 and c2 evaluated from traces of powers of the matrix:
 * c1 = Tr[H^2]/4 and c2 = Tr[(H^2 - c1)^2]/16. The remaining fields are
 * filled in from the closed formulas. Requires the shifted Hamiltonian.
 */
Invariants compute_invariants(const DiracHamiltonian& h);

/**
 * The correction operator
 *
 *   O = Sigma.d1 + gamma^0 Sigma.d2 + i gamma^0 gamma^5 Sigma.d3
 *       + gamma^5 Sigma.d4 + (P.W) gamma^5 - (W.v) gamma^0
 *       + i (W.u) gamma^0 gamma^5,
 *
 * which satisfies H^2 = c1 + 2 O for the shifted Hamiltonian.
 */
Matrix4 build_O(const DiracHamiltonian& h);

}  // namespace spinparity
