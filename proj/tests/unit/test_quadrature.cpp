/*
 * Copyright 2026 The lauricella Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>

#include "lauricella/error.hpp"
#include "lauricella/quadrature.hpp"
#include "lauricella/special.hpp"
#include "oracles.hpp"

namespace lauricella {
namespace {

using oracle::rel_err;

TEST(TanhSinh, Polynomial) {
  const auto r = tanh_sinh([](double u, double) { return Complex(u * u, 0.0); }, 2.0);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(rel_err(r.value, 8.0 / 3.0), 1e-14);
}

TEST(TanhSinh, EndpointSingularities) {
  // int_0^1 u^{-1/2} (1-u)^{-1/3} du = B(1/2, 2/3), evaluated from the
  // endpoint distances without cancellation.
  const auto r = tanh_sinh(
      [](double u, double v) { return Complex(std::pow(u, -0.5) * std::pow(v, -1.0 / 3.0)); },
      1.0);
  const double want = std::tgamma(0.5) * std::tgamma(2.0 / 3.0) / std::tgamma(0.5 + 2.0 / 3.0);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(rel_err(r.value, want), 1e-12);
}

TEST(EulerIntegral, SmallX) {
  const auto p = ParameterSet::make(1, 0.2, 0.3, {0.9});
  const auto r = euler_integral_m1(p, 0.01);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(rel_err(r.value, 10.61416484767571195), 1e-8);
}

TEST(EulerIntegral, LargerX) {
  const auto p = ParameterSet::make(1, 0.2, 0.3, {0.9});
  EXPECT_LT(rel_err(euler_integral_m1(p, 0.2).value, 10.761669301806591469), 1e-7);
}

TEST(EulerIntegral, VanishingBIsABetaFunction) {
  const auto p = ParameterSet::make(1, 0.2, 0.0, {0.9});
  const double want = std::tgamma(0.1) * std::tgamma(0.7) / std::tgamma(0.8);
  EXPECT_LT(rel_err(euler_integral_m1(p, 0.05).value, want), 1e-9);
}

TEST(EulerIntegral, ComplexParameters) {
  const auto p = ParameterSet::make(1, {-0.4, 0.2}, {0.5, -0.3}, {{1.4, 0.1}});
  const auto report = verify_integral_identity(p, 0.1, 1e-7);
  EXPECT_TRUE(report.pass) << report.residual;
}

TEST(EulerIntegral, Preconditions) {
  auto kind_of = [](const ParameterSet &p, double x) {
    try {
      euler_integral_m1(p, x);
    } catch (const Error &e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of(ParameterSet::make(1, 0.95, 0.3, {0.9}), 0.1),
            ErrorKind::ConvergenceCondition);
  EXPECT_EQ(kind_of(ParameterSet::make(1, 0.2, 1.2, {0.9}), 0.1),
            ErrorKind::ConvergenceCondition);
  EXPECT_THROW(euler_integral_m1(ParameterSet::make(2, 0.2, 0.3, {0.9, 0.8}), 0.1), Error);
}

TEST(IntegralIdentity, Report) {
  const auto p = ParameterSet::make(1, 0.2, 0.3, {0.9});
  const auto report = verify_integral_identity(p, 0.05, 1e-7);
  EXPECT_TRUE(report.pass);
  EXPECT_LT(report.residual, 1e-10);
  EXPECT_EQ(report.identity_name, "euler_integral_m1");
}

} // namespace
} // namespace lauricella
