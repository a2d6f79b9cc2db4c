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

#include "spinparity/potentials.hpp"

#include <cmath>

#include "spinparity/errors.hpp"
#include "spinparity/tolerances.hpp"

namespace spinparity {

namespace {

const Complex kI(0.0, 1.0);

// Field strength with both indices down: F_{0i} = E_i, F_{ij} = -eps_{ijk} B_k.
std::array<std::array<double, 4>, 4> field_strength(const FieldConfig& f) {
  std::array<std::array<double, 4>, 4> F{};
  for (int i = 0; i < 3; ++i) {
    F[0][i + 1] = f.E[i];
    F[i + 1][0] = -f.E[i];
  }
  F[1][2] = -f.B[2];
  F[2][1] = f.B[2];
  F[2][3] = -f.B[0];
  F[3][2] = f.B[0];
  F[3][1] = -f.B[1];
  F[1][3] = f.B[1];
  return F;
}

Matrix4 sigma_contracted_field(const FieldConfig& f) {
  const auto F = field_strength(f);
  Matrix4 sum = Matrix4::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (F[mu][nu] != 0.0) sum += sigma_munu(mu, nu) * F[mu][nu];
  return 0.5 * sum;
}

}  // namespace

Matrix4 covariant_potential(PotentialClass c, const FieldConfig& f) {
  const GammaSet& g = dirac_set();
  switch (c) {
    case PotentialClass::Scalar:
      return f.phi_S * g.identity;
    case PotentialClass::Pseudoscalar:
      return kI * f.mu * g.gamma5;
    case PotentialClass::Vector: {
      Matrix4 out = f.A0 * g.gamma0;
      for (int i = 0; i < 3; ++i) out -= f.A[i] * g.gamma[i];
      return out;
    }
    case PotentialClass::Pseudovector: {
      Matrix4 out = f.q * g.gamma0;
      for (int i = 0; i < 3; ++i) out -= f.W[i] * g.gamma[i];
      return g.gamma5 * out;
    }
    case PotentialClass::Tensor:
      return f.kappa * sigma_contracted_field(f);
    case PotentialClass::Pseudotensor:
      return -kI * f.chi * g.gamma5 * sigma_contracted_field(f);
  }
  throw Error("unknown potential class");
}

Matrix4 dirac_potential(PotentialClass c, const FieldConfig& f) {
  const GammaSet& g = dirac_set();
  switch (c) {
    case PotentialClass::Scalar:
      return f.phi_S * g.gamma0;
    case PotentialClass::Pseudoscalar:
      return kI * f.mu * g.gamma0 * g.gamma5;
    case PotentialClass::Vector: {
      Matrix4 out = f.A0 * g.identity;
      for (int i = 0; i < 3; ++i) out -= f.A[i] * g.alpha[i];
      return out;
    }
    case PotentialClass::Pseudovector: {
      Matrix4 out = -f.q * g.gamma5;
      for (int i = 0; i < 3; ++i) out += f.W[i] * g.gamma5 * g.alpha[i];
      return out;
    }
    case PotentialClass::Tensor: {
      Matrix4 out = Matrix4::Zero();
      for (int i = 0; i < 3; ++i) {
        out += kI * f.E[i] * g.gamma[i];
        out += f.B[i] * g.gamma5 * g.gamma[i];
      }
      return f.kappa * out;
    }
    case PotentialClass::Pseudotensor: {
      Matrix4 out = Matrix4::Zero();
      for (int i = 0; i < 3; ++i) {
        out += kI * f.B[i] * g.gamma[i];
        out -= f.E[i] * g.gamma5 * g.gamma[i];
      }
      return f.chi * out;
    }
  }
  throw Error("unknown potential class");
}

Matrix4 su2su2_potential(PotentialClass c, const FieldConfig& f) {
  switch (c) {
    case PotentialClass::Scalar:
      return f.phi_S * kron_pauli(3, 0);
    case PotentialClass::Pseudoscalar:
      return -f.mu * kron_pauli(2, 0);
    case PotentialClass::Vector: {
      Matrix4 out = f.A0 * kron_pauli(0, 0);
      for (int i = 0; i < 3; ++i) out -= f.A[i] * kron_pauli(1, i + 1);
      return out;
    }
    case PotentialClass::Pseudovector: {
      Matrix4 out = -f.q * kron_pauli(1, 0);
      for (int i = 0; i < 3; ++i) out += f.W[i] * kron_pauli(0, i + 1);
      return out;
    }
    case PotentialClass::Tensor: {
      Matrix4 out = Matrix4::Zero();
      for (int i = 0; i < 3; ++i) {
        out -= f.E[i] * kron_pauli(2, i + 1);
        out -= f.B[i] * kron_pauli(3, i + 1);
      }
      return f.kappa * out;
    }
    case PotentialClass::Pseudotensor: {
      Matrix4 out = Matrix4::Zero();
      for (int i = 0; i < 3; ++i) {
        out -= f.B[i] * kron_pauli(2, i + 1);
        out += f.E[i] * kron_pauli(3, i + 1);
      }
      return f.chi * out;
    }
  }
  throw Error("unknown potential class");
}

DiracHamiltonian build_hamiltonian(const FieldConfig& f, bool subtract_A0) {
  const GammaSet& g = dirac_set();
  const Vector3 P = f.kinetic_momentum();
  const Vector3 u = f.u();
  const Vector3 v = f.v();

  Matrix4 H = f.effective_mass() * g.gamma0;
  H += kI * f.mu * g.gamma0 * g.gamma5;
  H -= f.q * g.gamma5;
  for (int i = 0; i < 3; ++i) {
    H += P[i] * g.alpha[i];
    H += f.W[i] * g.gamma5 * g.alpha[i];
    H += kI * u[i] * g.gamma[i];
    H += v[i] * g.gamma5 * g.gamma[i];
  }
  if (!subtract_A0) H += f.A0 * g.identity;
  return {H, f, !subtract_A0};
}

Matrix4 su2su2_hamiltonian(const FieldConfig& f, bool subtract_A0) {
  const Vector3 P = f.kinetic_momentum();
  const Vector3 u = f.u();
  const Vector3 v = f.v();

  Matrix4 H = f.effective_mass() * kron_pauli(3, 0);
  H -= f.mu * kron_pauli(2, 0);
  H -= f.q * kron_pauli(1, 0);
  for (int i = 0; i < 3; ++i) {
    H += P[i] * kron_pauli(1, i + 1);
    H += f.W[i] * kron_pauli(0, i + 1);
    H -= u[i] * kron_pauli(2, i + 1);
    H -= v[i] * kron_pauli(3, i + 1);
  }
  if (!subtract_A0) H += f.A0 * kron_pauli(0, 0);
  return H;
}

Invariants closed_invariants(const FieldConfig& f) {
  const double M = f.effective_mass();
  const Vector3 P = f.kinetic_momentum();
  const Vector3 u = f.u();
  const Vector3 v = f.v();

  Invariants inv;
  inv.d1 = f.mu * u - M * v - f.q * P;
  inv.d2 = M * f.W + P.cross(u);
  inv.d3 = f.mu * f.W + P.cross(v);
  inv.d4 = -f.q * f.W - u.cross(v);
  inv.pw = P.dot(f.W);
  inv.wu = f.W.dot(u);
  inv.wv = f.W.dot(v);
  inv.c1 = P.squaredNorm() + M * M + f.mu * f.mu + f.q * f.q +
           f.W.squaredNorm() + u.squaredNorm() + v.squaredNorm();
  inv.c2 = inv.d1.squaredNorm() + inv.d2.squaredNorm() +
           inv.d3.squaredNorm() + inv.d4.squaredNorm() + inv.pw * inv.pw +
           inv.wu * inv.wu + inv.wv * inv.wv;
  inv.delta =
      f.mu * inv.wu - M * inv.wv - f.q * inv.pw - u.cross(v).dot(P);
  return inv;
}

Invariants compute_invariants(const DiracHamiltonian& h) {
  if (h.includes_A0 && h.config.A0 != 0.0)
    throw NotTraceless("invariants require the A0-shifted Hamiltonian");
  Invariants inv = closed_invariants(h.config);
  const Matrix4 H2 = h.matrix * h.matrix;
  inv.c1 = 0.25 * H2.trace().real();
  const Matrix4 R = H2 - inv.c1 * Matrix4::Identity();
  inv.c2 = (R * R).trace().real() / 16.0;
  return inv;
}

Matrix4 build_O(const DiracHamiltonian& h) {
  const GammaSet& g = dirac_set();
  const Invariants inv = closed_invariants(h.config);
  const Matrix4 ig0g5 = kI * g.gamma0 * g.gamma5;

  Matrix4 O = inv.pw * g.gamma5 - inv.wv * g.gamma0 + inv.wu * ig0g5;
  for (int i = 0; i < 3; ++i) {
    O += inv.d1[i] * g.sigma[i];
    O += inv.d2[i] * g.gamma0 * g.sigma[i];
    O += inv.d3[i] * ig0g5 * g.sigma[i];
    O += inv.d4[i] * g.gamma5 * g.sigma[i];
  }
  return O;
}

}  // namespace spinparity
