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

#include "doctest.h"
#include "spinparity/errors.hpp"
#include "spinparity/matrix.hpp"
#include "spinparity/potentials.hpp"

namespace spinparity {
namespace {

FieldConfig free_config() {
  FieldConfig f;
  f.m = 1.0;
  f.p = Vector3(1.0, 0.0, 0.0);
  return f;
}

FieldConfig tensor_config() {
  FieldConfig f;
  f.m = 1.0;
  f.kappa = 1.0;
  f.p = Vector3(1.0, 0.0, 0.0);
  f.B = Vector3(0.0, 1.0, 0.0);
  return f;
}

TEST_SUITE("ansatz") {

TEST_CASE("eigenvalue branches for the tensor example") {
  CHECK(eigenvalue_lambda(3.0, 2.0, 1, 2) ==
        doctest::Approx(0.4142135623730948).epsilon(1e-14));
  CHECK(eigenvalue_lambda(3.0, 2.0, 1, 1) ==
        doctest::Approx(-0.4142135623730948).epsilon(1e-14));
  CHECK(eigenvalue_lambda(3.0, 2.0, 2, 2) ==
        doctest::Approx(2.414213562373095).epsilon(1e-14));
  CHECK(eigenvalue_lambda(3.0, 2.0, 2, 1) ==
        doctest::Approx(-2.414213562373095).epsilon(1e-14));
}

TEST_CASE("eigenvalue rejects a closing gap and bad branch labels") {
  CHECK_THROWS_AS(eigenvalue_lambda(1.0, 0.25, 1, 2), DegenerateEnergy);
  CHECK_THROWS_AS(eigenvalue_lambda(1.0, 2.0, 1, 2), DegenerateEnergy);
  CHECK_THROWS_AS(eigenvalue_lambda(1.0, 0.0, 3, 2), ConfigError);
  CHECK_THROWS_AS(eigenvalue_lambda(1.0, 0.0, 1, 0), ConfigError);
}

TEST_CASE("free particle states are mixed with rank two") {
  const DiracHamiltonian h = build_hamiltonian(free_config());
  CHECK(purity_condition(h) == PurityClass::MixedRank2);
  for (int n : {1, 2}) {
    const StationaryState st = build_state(h, 1, n);
    CHECK(st.purity == PurityClass::MixedRank2);
    CHECK(st.lambda ==
          doctest::Approx((n == 2 ? 1.0 : -1.0) * std::sqrt(2.0))
              .epsilon(1e-14));
    CHECK(std::abs(st.rho.trace() - Complex(1.0, 0.0)) <= 1e-14);
    CHECK(purity(st.rho) == doctest::Approx(0.5).epsilon(1e-13));
    const Matrix4 comm = h.matrix * st.rho - st.rho * h.matrix;
    CHECK(max_abs(comm) <= 1e-13);
    CHECK((h.matrix * st.rho).trace().real() ==
          doctest::Approx(st.lambda).epsilon(1e-13));
  }
}

TEST_CASE("tensor example states are pure projectors") {
  const DiracHamiltonian h = build_hamiltonian(tensor_config());
  CHECK(purity_condition(h) == PurityClass::PureProjector);
  for (int s : {1, 2}) {
    for (int n : {1, 2}) {
      const StationaryState st = build_state(h, s, n);
      CHECK(st.purity == PurityClass::PureProjector);
      CHECK(std::abs(st.rho.trace() - Complex(1.0, 0.0)) <= 1e-13);
      CHECK(max_abs(st.rho * st.rho - st.rho) <= 1e-13);
      CHECK((h.matrix * st.rho).trace().real() ==
            doctest::Approx(st.lambda).epsilon(1e-12));
      CHECK(hermitian_eigenvalues(st.rho).minCoeff() >= -1e-13);
    }
  }
}

TEST_CASE("the four branch states of the tensor example are orthogonal") {
  const DiracHamiltonian h = build_hamiltonian(tensor_config());
  const StationaryState a = build_state(h, 1, 1);
  const StationaryState b = build_state(h, 1, 2);
  const StationaryState c = build_state(h, 2, 1);
  const StationaryState d = build_state(h, 2, 2);
  CHECK(std::abs((a.rho * b.rho).trace()) <= 1e-13);
  CHECK(std::abs((a.rho * c.rho).trace()) <= 1e-13);
  CHECK(std::abs((a.rho * d.rho).trace()) <= 1e-13);
  CHECK(std::abs((b.rho * c.rho).trace()) <= 1e-13);
  CHECK(max_abs(a.rho + b.rho + c.rho + d.rho - Matrix4::Identity()) <=
        1e-13);
}

TEST_CASE("mixed state purity follows the rank two formula") {
  FieldConfig f;
  f.m = 1.0;
  f.mu = 1.0;
  f.p = Vector3(std::sqrt(2.0), 0.0, 0.0);
  const DiracHamiltonian h = build_hamiltonian(f);
  const StationaryState st = build_state(h, 1, 2);
  CHECK(st.purity == PurityClass::MixedRank2);
  CHECK(st.c1 == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(purity(st.rho) ==
        doctest::Approx(0.25 * (1.0 + st.c1 / (st.lambda * st.lambda)))
            .epsilon(1e-13));
}

TEST_CASE("a combined configuration with nonzero delta is rejected") {
  FieldConfig f;
  f.m = 1.0;
  f.q = 0.7;
  f.p = Vector3(1.0, 0.0, 0.0);
  f.W = Vector3(0.6, 0.0, 0.8);
  CHECK(closed_invariants(f).delta != 0.0);
  const DiracHamiltonian h = build_hamiltonian(f);
  CHECK(purity_condition(h) == PurityClass::Unsupported);
  CHECK_THROWS_AS(build_state(h, 1, 2), UnsupportedConfiguration);
}

TEST_CASE("a vanishing energy branch is reported as degenerate") {
  FieldConfig f;
  f.m = 0.6;
  f.kappa = 1.0;
  f.p = Vector3(0.8, 0.0, 0.0);
  f.B = Vector3(0.0, 1.0, 0.0);
  const DiracHamiltonian h = build_hamiltonian(f);
  CHECK_THROWS_AS(build_state(h, 1, 2), DegenerateEnergy);
  CHECK_NOTHROW(build_state(h, 2, 2));
}

TEST_CASE("state construction requires the shifted hamiltonian") {
  FieldConfig f = free_config();
  f.A0 = 1.5;
  CHECK_THROWS_AS(build_state(build_hamiltonian(f, false), 1, 2),
                  NotTraceless);
}

}  // TEST_SUITE

}  // namespace
}  // namespace spinparity
