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

#include "spinparity/ansatz.hpp"

#include <cmath>
#include <string>

#include "spinparity/errors.hpp"
#include "spinparity/tolerances.hpp"

namespace spinparity {

namespace {

void check_branch_indices(int s, int n) {
  if (s != 1 && s != 2) throw ConfigError("s must be 1 or 2");
  if (n != 1 && n != 2) throw ConfigError("n must be 1 or 2");
}

double branch_sign(int k) { return k == 1 ? -1.0 : 1.0; }

}  // namespace

PurityClass purity_condition(const DiracHamiltonian& h) {
  const Matrix4 O = build_O(h);
  if (max_abs(O) <= tol::kMixedOperatorNorm) return PurityClass::MixedRank2;
  const double c2 = closed_invariants(h.config).c2;
  if (c2 > tol::kPureC2Floor) {
    const Matrix4 r = O * O - c2 * Matrix4::Identity();
    if (max_abs(r) <= tol::kPureConditionScale * std::max(1.0, c2))
      return PurityClass::PureProjector;
  }
  return PurityClass::Unsupported;
}

double eigenvalue_lambda(double c1, double c2, int s, int n) {
  check_branch_indices(s, n);
  if (c2 < 0.0) throw NumericalError("c2 must be nonnegative");
  const double radicand = c1 + 2.0 * branch_sign(s) * std::sqrt(c2);
  if (radicand <= tol::kDegenerateRadicand)
    throw DegenerateEnergy("stationary branches coincide, lambda^2 = " +
                           std::to_string(radicand));
  return branch_sign(n) * std::sqrt(radicand);
}

StationaryState build_state(const DiracHamiltonian& h, int s, int n) {
  check_branch_indices(s, n);
  if (h.includes_A0 && h.config.A0 != 0.0)
    throw NotTraceless("stationary states require the A0-shifted Hamiltonian");

  const PurityClass pc = purity_condition(h);
  if (pc == PurityClass::Unsupported)
    throw UnsupportedConfiguration(
        "the squared Hamiltonian does not split into a scalar plus a "
        "correction squaring to a scalar");

  const Invariants inv = closed_invariants(h.config);
  const double c2 = pc == PurityClass::MixedRank2 ? 0.0 : inv.c2;
  const double lambda = eigenvalue_lambda(inv.c1, c2, s, n);

  const Matrix4 I = Matrix4::Identity();
  Matrix4 rho = I + branch_sign(n) / std::abs(lambda) * h.matrix;
  if (pc == PurityClass::PureProjector)
    rho = (I + branch_sign(s) / std::sqrt(inv.c2) * build_O(h)) * rho;
  rho *= 0.25;
  rho = 0.5 * (rho + rho.adjoint().eval());
  return {rho, lambda, inv.c1, inv.c2, pc, s, n};
}

}  // namespace spinparity
