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

#include "spinparity/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spinparity/errors.hpp"
#include "spinparity/tolerances.hpp"

namespace spinparity {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sgn(int k) { return k == 1 ? -1.0 : 1.0; }

double coeff_max_abs(const Invariants& inv) {
  return std::max({inv.d1.cwiseAbs().maxCoeff(), inv.d2.cwiseAbs().maxCoeff(),
                   inv.d3.cwiseAbs().maxCoeff(), inv.d4.cwiseAbs().maxCoeff(),
                   std::abs(inv.pw), std::abs(inv.wu), std::abs(inv.wv)});
}

double delta_scale(const Invariants& inv) {
  return std::max(1.0, inv.c1 * std::sqrt(std::max(inv.c1, 0.0)));
}

bool pseudoscalar_type(const FieldConfig& f) {
  const double tiny = tol::kMixedOperatorNorm;
  return f.W.cwiseAbs().maxCoeff() <= tiny &&
         f.u().cwiseAbs().maxCoeff() <= tiny &&
         f.v().cwiseAbs().maxCoeff() <= tiny && std::abs(f.q) <= tiny;
}

ScenarioResult evaluate_pure_case(const FieldConfig& f, int s, int n) {
  const Invariants inv = closed_invariants(f);
  ScenarioResult r;
  r.config = f;
  r.s = s;
  r.n = n;
  r.c1 = inv.c1;
  r.c2 = inv.c2;

  if (coeff_max_abs(inv) <= tol::kMixedOperatorNorm) {
    r.lambda = eigenvalue_lambda(inv.c1, 0.0, s, n);
    r.bloch_a = (sgn(n) / std::abs(r.lambda)) * f.W;
    r.a_squared = r.bloch_a.squaredNorm();
    if (pseudoscalar_type(f)) {
      const double M = f.effective_mass();
      const double P2 = f.kinetic_momentum().squaredNorm();
      r.measure = 0.0;
      r.discord_geo_1 =
          std::min(M * M + f.mu * f.mu, P2) / (4.0 * inv.c1);
      r.discord_geo_2 = 0.0;
    } else {
      r.measure = kNaN;
      r.discord_geo_1 = kNaN;
      r.discord_geo_2 = kNaN;
    }
    return r;
  }

  r.lambda = eigenvalue_lambda(inv.c1, inv.c2, s, n);
  r.bloch_a = closed_bloch(f, s, n);
  r.a_squared = r.bloch_a.squaredNorm();
  r.measure = std::sqrt(std::clamp(1.0 - r.a_squared, 0.0, 1.0));
  r.discord_geo_1 = 0.5 * r.measure * r.measure;
  r.discord_geo_2 = r.discord_geo_1;
  return r;
}

}  // namespace

Vector3 closed_bloch(const FieldConfig& f, int s, int n) {
  const Invariants inv = closed_invariants(f);
  if (coeff_max_abs(inv) <= tol::kMixedOperatorNorm) {
    const double lambda = eigenvalue_lambda(inv.c1, 0.0, s, n);
    return (sgn(n) / std::abs(lambda)) * f.W;
  }
  if (inv.c2 <= tol::kPureC2Floor)
    throw UnsupportedConfiguration(
        "correction operator does not square to a positive scalar");
  if (std::abs(inv.delta) > tol::kScenarioConstraint * delta_scale(inv))
    throw ConstraintViolated(
        "correction operator does not square to a scalar");

  const double lambda = eigenvalue_lambda(inv.c1, inv.c2, s, n);
  const double al = std::abs(lambda);
  const double rc2 = std::sqrt(inv.c2);
  const double M = f.effective_mass();
  const Vector3 P = f.kinetic_momentum();
  const Vector3 u = f.u();
  const Vector3 v = f.v();

  Vector3 a = (sgn(s) / rc2) * inv.d1 + (sgn(n) / al) * f.W;
  a += (sgn(s) * sgn(n) / (al * rc2)) *
       (M * inv.d2 + f.mu * inv.d3 + inv.pw * P + f.q * f.q * f.W +
        inv.wu * u + inv.wv * v);
  return a;
}

ScenarioResult case_pseudoscalar(double m, double mu, double P, int n) {
  FieldConfig f;
  f.m = m;
  f.mu = mu;
  f.p = P * Vector3::UnitX();

  ScenarioResult r;
  r.config = f;
  r.s = 1;
  r.n = n;
  r.c1 = P * P + m * m + mu * mu;
  r.c2 = 0.0;
  r.lambda = eigenvalue_lambda(r.c1, 0.0, 1, n);
  r.bloch_a = Vector3::Zero();
  r.a_squared = 0.0;
  r.discord_geo_1 = std::min(m * m + mu * mu, P * P) / (4.0 * r.c1);
  r.discord_geo_2 = 0.0;
  const double inner =
      std::max(0.0, 0.25 - mu * mu * P * P / (r.c1 * r.c1));
  r.measure = 0.5 - std::sqrt(inner);
  return r;
}

ScenarioResult case_tensor_pseudoscalar(double m, double mu, double coupling,
                                        double B, double P, double theta,
                                        int s, int n, bool pseudotensor) {
  const FieldConfig f =
      frame_b_in_plane(m, mu, coupling, B, P, theta, pseudotensor);
  return evaluate_pure_case(f, s, n);
}

ScenarioResult case_pseudovector(double m, double mu, double q, double W,
                                 double P, double theta, int s, int n) {
  const FieldConfig f = frame_w_in_plane(m, mu, q, W, P, theta);
  const Invariants inv = closed_invariants(f);
  if (std::abs(f.q * inv.pw) > tol::kScenarioConstraint * delta_scale(inv))
    throw ConstraintViolated(
        "pseudovector closed forms require q = 0 or W orthogonal to the "
        "momentum");
  return evaluate_pure_case(f, s, n);
}

ScenarioResult case_combined(double m, double mu, double q, const Vector3& W,
                             const Vector3& B, const Vector3& P, int s,
                             int n) {
  FieldConfig f;
  f.m = m;
  f.mu = mu;
  f.q = q;
  f.kappa = 1.0;
  f.W = W;
  f.B = B;
  f.p = P;
  return case_combined(f, s, n);
}

ScenarioResult case_combined(const FieldConfig& f, int s, int n) {
  const Invariants inv = closed_invariants(f);
  if (std::abs(inv.delta) > tol::kScenarioConstraint * delta_scale(inv))
    throw ConstraintViolated(
        "combined case requires M (W.B) + q (P.W) to vanish");
  return evaluate_pure_case(f, s, n);
}

double ur_limit_combined(double W, double B, double theta) {
  const double wc = W * std::cos(theta);
  const double a2 = wc * wc / (B * B + wc * wc);
  return std::sqrt(1.0 - a2);
}

std::optional<double> critical_angle(double mu, double W, double P,
                                     double B) {
  if (P <= 0.0 || B <= 0.0) return std::nullopt;
  const double sin_c = mu * W / (P * B);
  if (!(sin_c > 0.0) || sin_c >= 1.0) return std::nullopt;
  return std::asin(sin_c);
}

FieldConfig frame_b_in_plane(double m, double mu, double coupling, double B,
                             double P, double theta, bool pseudotensor) {
  FieldConfig f;
  f.m = m;
  f.mu = mu;
  if (pseudotensor)
    f.chi = coupling;
  else
    f.kappa = coupling;
  f.p = P * Vector3::UnitX();
  f.B = B * Vector3(std::cos(theta), std::sin(theta), 0.0);
  return f;
}

FieldConfig frame_w_in_plane(double m, double mu, double q, double W,
                             double P, double theta) {
  FieldConfig f;
  f.m = m;
  f.mu = mu;
  f.q = q;
  f.p = P * Vector3::UnitX();
  f.W = W * Vector3(std::cos(theta), std::sin(theta), 0.0);
  return f;
}

FieldConfig frame_w_parallel_omega_b(double m, double mu, double q, double W,
                                     double B, double P, double theta,
                                     bool antiparallel) {
  FieldConfig f;
  f.m = m;
  f.mu = mu;
  f.q = q;
  f.kappa = 1.0;
  f.p = P * Vector3::UnitX();
  f.B = B * Vector3(std::cos(theta), std::sin(theta), 0.0);
  f.W = (antiparallel ? -W : W) * Vector3::UnitZ();
  return f;
}

FieldConfig frame_b_parallel_omega_w(double m, double mu, double q, double W,
                                     double B, double P, double theta,
                                     bool antiparallel) {
  FieldConfig f;
  f.m = m;
  f.mu = mu;
  f.q = q;
  f.kappa = 1.0;
  f.p = P * Vector3::UnitX();
  f.W = W * Vector3(std::cos(theta), std::sin(theta), 0.0);
  f.B = (antiparallel ? -B : B) * Vector3::UnitZ();
  return f;
}

}  // namespace spinparity
