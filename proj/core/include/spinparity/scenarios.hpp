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

#include <optional>
#include <string>

#include "spinparity/ansatz.hpp"

namespace spinparity {

/**
 * Closed-form evaluation of one case study. For the pure cases `measure`
 * carries the concurrence sqrt(1 - a^2); for the pseudoscalar case it
 * carries the reference curve 1/2 - sqrt(1/4 - mu^2 P^2 / lambda^4), which
 * differs from the Hilbert-Schmidt geometric discord reported in
 * discord_geo_1 and discord_geo_2.
 */
struct ScenarioResult {
  double c1 = 0.0;
  double c2 = 0.0;
  double lambda = 0.0;
  Vector3 bloch_a = Vector3::Zero();  // spin Bloch vector, closed form
  double a_squared = 0.0;
  double measure = 0.0;
  double discord_geo_1 = 0.0;
  double discord_geo_2 = 0.0;
  std::string validity = "ok";
  FieldConfig config;
  int s = 1;
  int n = 2;
};

/**
 * Closed form of the spin Bloch vector of the stationary state, with
 * d1..d4, P, u, v, M and the dot products as in Invariants:
 *
 *   a = (-1)^s d1 / sqrt(c2) + (-1)^n W / |lambda|
 *       + (-1)^{s+n} / (|lambda| sqrt(c2))
 *         [ M d2 + mu d3 + (P.W) P + q^2 W + (W.u) u + (W.v) v ].
 *
 * When the correction operator vanishes this reduces to (-1)^n W / |lambda|.
 * Valid for configurations whose correction operator squares to a scalar.
 */
Vector3 closed_bloch(const FieldConfig& f, int s, int n);

/**
 * Pseudoscalar potential, momentum P along x. The state is the rank-2
 * mixed one; the concurrence vanishes, the geometric discord with respect
 * to parity is min(m^2 + mu^2, P^2) / (4 lambda^2) and the one with respect
 * to spin is zero.
 */
ScenarioResult case_pseudoscalar(double m, double mu, double P, int n = 2);

/**
 * Tensor (or, with pseudotensor = true, pseudotensor) potential on top of a
 * pseudoscalar one. Momentum P along x, magnetic field of magnitude B in
 * the xy plane at angle theta from the momentum.
 */
ScenarioResult case_tensor_pseudoscalar(double m, double mu, double coupling,
                                        double B, double P, double theta,
                                        int s, int n,
                                        bool pseudotensor = false);

/**
 * Pseudovector potential (q, W) on top of a pseudoscalar one. Momentum P
 * along x, W of magnitude W in the xy plane at angle theta from the
 * momentum. The closed forms require q = 0 or W orthogonal to the momentum
 * and throw ConstraintViolated otherwise.
 */
ScenarioResult case_pseudovector(double m, double mu, double q, double W,
                                 double P, double theta, int s, int n);

/**
 * Combined pseudovector and magnetic tensor potential with unit tensor
 * coupling. Throws ConstraintViolated unless M (W.B) + q (P.W) vanishes,
 * the condition for the correction operator to square to a scalar.
 */
ScenarioResult case_combined(double m, double mu, double q, const Vector3& W,
                             const Vector3& B, const Vector3& P, int s,
                             int n);

/** Convenience overload reading every coupling from the configuration. */
ScenarioResult case_combined(const FieldConfig& f, int s, int n);

/**
 * Ultrarelativistic limit of the combined case with the magnetic field
 * orthogonal to the plane of W and the momentum: as P grows the spin Bloch
 * length approaches a^2 = W^2 cos^2(theta) / (B^2 + W^2 cos^2(theta)).
 * Returns the limiting concurrence sqrt(1 - a^2).
 */
double ur_limit_combined(double W, double B, double theta);

/**
 * The angle theta_c with sin(theta_c) = mu W / (P B) at which the combined
 * case in the W parallel to P x B frame changes branch. Empty when no such
 * angle exists.
 */
std::optional<double> critical_angle(double mu, double W, double P, double B);

/** Momentum P along x, field of magnitude B at angle theta in the xy plane. */
FieldConfig frame_b_in_plane(double m, double mu, double coupling, double B,
                             double P, double theta, bool pseudotensor = false);

/** Momentum P along x, W of magnitude W at angle theta in the xy plane. */
FieldConfig frame_w_in_plane(double m, double mu, double q, double W, double P,
                             double theta);

/**
 * Combined-case frame with W along +z (or -z when antiparallel), the
 * magnetic field at angle theta in the xy plane and momentum P along x, so
 * that W is parallel (or antiparallel) to P x B. Unit tensor coupling.
 */
FieldConfig frame_w_parallel_omega_b(double m, double mu, double q, double W,
                                     double B, double P, double theta,
                                     bool antiparallel = false);

/**
 * Combined-case frame with the magnetic field along +z (or -z when
 * antiparallel), W at angle theta in the xy plane and momentum P along x,
 * so that B is parallel (or antiparallel) to P x W. Unit tensor coupling.
 */
FieldConfig frame_b_parallel_omega_w(double m, double mu, double q, double W,
                                     double B, double P, double theta,
                                     bool antiparallel = false);

}  // namespace spinparity
