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

#include "spinparity/clifford.hpp"

#include <vector>

#include "spinparity/errors.hpp"

namespace spinparity {

namespace {

GammaSet make_dirac_set() {
  GammaSet g;
  g.identity = kron_pauli(0, 0);
  g.gamma0 = kron_pauli(3, 0);
  g.gamma5 = kron_pauli(1, 0);
  for (int i = 0; i < 3; ++i) {
    g.alpha[i] = kron_pauli(1, i + 1);
    g.sigma[i] = kron_pauli(0, i + 1);
    g.gamma[i] = g.gamma0 * g.alpha[i];
  }
  return g;
}

struct Basis {
  std::array<Matrix4, kBasisSize> element;
  std::array<std::string, kBasisSize> label;
};

Basis make_basis() {
  const GammaSet& g = dirac_set();
  Basis b;
  int k = 0;
  b.element[k] = g.identity;
  b.label[k++] = "1";
  for (int mu = 0; mu < 4; ++mu) {
    b.element[k] = gamma_mu(mu);
    b.label[k++] = "g" + std::to_string(mu);
  }
  b.element[k] = g.gamma5;
  b.label[k++] = "g5";
  for (int mu = 0; mu < 4; ++mu) {
    b.element[k] = g.gamma5 * gamma_mu(mu);
    b.label[k++] = "g5g" + std::to_string(mu);
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      b.element[k] = sigma_munu(mu, nu);
      b.label[k++] = "s" + std::to_string(mu) + std::to_string(nu);
    }
  return b;
}

const Basis& basis() {
  static const Basis b = make_basis();
  return b;
}

}  // namespace

const GammaSet& dirac_set() {
  static const GammaSet g = make_dirac_set();
  return g;
}

double metric(int mu, int nu) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3)
    throw Error("metric index out of range");
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

const Matrix4& gamma_mu(int mu) {
  const GammaSet& g = dirac_set();
  if (mu == 0) return g.gamma0;
  if (mu >= 1 && mu <= 3) return g.gamma[mu - 1];
  throw Error("gamma index out of range");
}

Matrix4 sigma_munu(int mu, int nu) {
  const Complex i(0.0, 1.0);
  const Matrix4& a = gamma_mu(mu);
  const Matrix4& b = gamma_mu(nu);
  return 0.5 * i * (a * b - b * a);
}

const Matrix4& basis_element(int i) {
  if (i < 0 || i >= kBasisSize) throw Error("basis index out of range");
  return basis().element[i];
}

const std::string& basis_label(int i) {
  if (i < 0 || i >= kBasisSize) throw Error("basis index out of range");
  return basis().label[i];
}

std::array<Complex, kBasisSize> decompose_in_basis(const Matrix4& m) {
  std::array<Complex, kBasisSize> x;
  for (int i = 0; i < kBasisSize; ++i)
    x[i] = 0.25 * (basis_element(i).adjoint() * m).trace();
  return x;
}

Matrix4 compose(const std::array<Complex, kBasisSize>& x) {
  Matrix4 m = Matrix4::Zero();
  for (int i = 0; i < kBasisSize; ++i) m += x[i] * basis_element(i);
  return m;
}

}  // namespace spinparity
