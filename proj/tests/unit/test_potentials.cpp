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

#include "doctest.h"
#include "spinparity/clifford.hpp"
#include "spinparity/errors.hpp"
#include "spinparity/matrix.hpp"
#include "test_rng.hpp"

namespace spinparity {
namespace {

constexpr PotentialClass kClasses[] = {
    PotentialClass::Scalar,       PotentialClass::Pseudoscalar,
    PotentialClass::Vector,       PotentialClass::Pseudovector,
    PotentialClass::Tensor,       PotentialClass::Pseudotensor};

TEST_SUITE("potentials") {

TEST_CASE("dirac form equals gamma0 times the covariant potential") {
  testing::TestRng rng(20260302);
  for (int trial = 0; trial < 25; ++trial) {
    const FieldConfig f = testing::random_config(rng);
    for (PotentialClass c : kClasses) {
      const Matrix4 lhs = dirac_potential(c, f);
      const Matrix4 rhs = dirac_set().gamma0 * covariant_potential(c, f);
      CHECK(max_abs(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_CASE("pauli construction matches the gamma construction per class") {
  testing::TestRng rng(20260303);
  for (int trial = 0; trial < 25; ++trial) {
    const FieldConfig f = testing::random_config(rng);
    for (PotentialClass c : kClasses)
      CHECK(max_abs(su2su2_potential(c, f) - dirac_potential(c, f)) <= 1e-12);
  }
}

TEST_CASE("hamiltonian matches its pauli construction and is traceless") {
  testing::TestRng rng(20260304);
  for (int trial = 0; trial < 25; ++trial) {
    const FieldConfig f = testing::random_config(rng);
    const DiracHamiltonian h = build_hamiltonian(f);
    CHECK(max_abs(h.matrix - su2su2_hamiltonian(f)) <= 1e-12);
    CHECK(std::abs(h.matrix.trace()) <= 1e-13);
    CHECK((h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK_FALSE(h.includes_A0);
  }
}

TEST_CASE("keeping A0 shifts the hamiltonian by a multiple of the identity") {
  testing::TestRng rng(20260305);
  const FieldConfig f = testing::random_config(rng);
  const Matrix4 shifted = build_hamiltonian(f, false).matrix;
  const Matrix4 traceless = build_hamiltonian(f, true).matrix;
  CHECK(max_abs(shifted - traceless - f.A0 * Matrix4::Identity()) <= 1e-13);
  CHECK(build_hamiltonian(f, false).includes_A0);
}

TEST_CASE("free particle invariants") {
  FieldConfig f;
  f.m = 1.0;
  f.p = Vector3(1.0, 0.0, 0.0);
  const Invariants inv = closed_invariants(f);
  CHECK(inv.c1 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(inv.c2 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(inv.delta == 0.0);
}

TEST_CASE("tensor example invariants") {
  FieldConfig f;
  f.m = 1.0;
  f.kappa = 1.0;
  f.p = Vector3(1.0, 0.0, 0.0);
  f.B = Vector3(0.0, 1.0, 0.0);
  const Invariants inv = closed_invariants(f);
  CHECK(inv.c1 == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(inv.c2 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(inv.delta == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("trace invariants agree with the closed formulas") {
  testing::TestRng rng(20260306);
  for (int trial = 0; trial < 50; ++trial) {
    const FieldConfig f = testing::random_config(rng);
    const Invariants closed = closed_invariants(f);
    const Invariants traced = compute_invariants(build_hamiltonian(f));
    CHECK(std::abs(traced.c1 - closed.c1) <=
          1e-10 * std::max(1.0, std::abs(closed.c1)));
    CHECK(std::abs(traced.c2 - closed.c2) <=
          1e-10 * std::max(1.0, std::abs(closed.c2)));
  }
}

TEST_CASE("correction operator closes the square of the hamiltonian") {
  testing::TestRng rng(20260307);
  for (int trial = 0; trial < 50; ++trial) {
    const FieldConfig f = testing::random_config(rng);
    const DiracHamiltonian h = build_hamiltonian(f);
    const Invariants inv = closed_invariants(f);
    const Matrix4 residual =
        build_O(h) -
        0.5 * (h.matrix * h.matrix - inv.c1 * Matrix4::Identity());
    CHECK(max_abs(residual) <= 1e-11);
  }
}

TEST_CASE("square of the correction operator and the trace of H O") {
  testing::TestRng rng(20260308);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldConfig f = testing::random_config(rng);
    const DiracHamiltonian h = build_hamiltonian(f);
    const Invariants inv = closed_invariants(f);
    const Matrix4 o = build_O(h);
    const double scale = std::max(1.0, inv.c2);
    CHECK(max_abs(o * o - inv.c2 * Matrix4::Identity() -
                  2.0 * inv.delta * h.matrix) <= 1e-10 * scale);
    CHECK(std::abs((h.matrix * o).trace().real() - 12.0 * inv.delta) <=
          1e-10 * scale);
  }
}

TEST_CASE("trace invariants reject a hamiltonian that keeps A0") {
  FieldConfig f;
  f.m = 1.0;
  f.A0 = 0.5;
  CHECK_THROWS_AS(compute_invariants(build_hamiltonian(f, false)),
                  NotTraceless);
}

}  // TEST_SUITE

}  // namespace
}  // namespace spinparity
