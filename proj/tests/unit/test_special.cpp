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
#include "lauricella/special.hpp"
#include "oracles.hpp"

namespace lauricella {
namespace {

using oracle::rel_err;

TEST(LogGamma, Factorials) {
  EXPECT_NEAR(std::abs(log_gamma(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(log_gamma(2.0)), 0.0, 1e-15);
  EXPECT_LT(rel_err(log_gamma(5.0), std::log(24.0)), 1e-14);
  EXPECT_LT(rel_err(log_gamma(0.5), 0.5 * std::log(oracle::kPi)), 1e-14);
}

TEST(LogGamma, ComplexReference) {
  EXPECT_LT(rel_err(log_gamma({2.5, 1.5}),
                    {-0.22711224079322732219, 1.171292934664603034}),
            1e-14);
}

TEST(LogGamma, ReflectedHalfPlaneModuloTwoPiI) {
  const Complex want{-0.38922764385094656904, 1.0525547569136034662};
  const Complex d = log_gamma({-1.3, 0.7}) - want;
  EXPECT_NEAR(d.real(), 0.0, 1e-13);
  const double turns = d.imag() / (2.0 * oracle::kPi);
  EXPECT_NEAR(turns, std::round(turns), 1e-13);
}

TEST(LogGamma, Poles) {
  for (double z : {0.0, -1.0, -7.0}) {
    try {
      log_gamma(z);
      FAIL() << "no pole at " << z;
    } catch (const Error &e) {
      EXPECT_EQ(e.kind(), ErrorKind::Pole);
    }
  }
}

TEST(Gamma, Reflection) {
  for (Complex z : {Complex{0.3, 0.0}, Complex{-2.7, 1.1}, Complex{1.9, -2.4}}) {
    const Complex want = oracle::kPi / std::sin(oracle::kPi * z);
    EXPECT_LT(rel_err(gamma_function(z) * gamma_function(1.0 - z), want), 1e-13);
  }
}

TEST(Gamma, RealAxis) {
  EXPECT_LT(rel_err(gamma_function(-0.5), -2.0 * std::sqrt(oracle::kPi)), 1e-14);
  EXPECT_LT(rel_err(gamma_function(10.0), 362880.0), 1e-14);
}

TEST(PrefactorF, OneVariableEmptySubset) {
  const auto p = ParameterSet::make(1, 0.2, 0.3, {0.9});
  EXPECT_LT(rel_err(prefactor_F(p, SubsetIndex::empty(1)), 10.607064271642759236),
            1e-14);
}

TEST(PrefactorF, OneVariableFullSubset) {
  // Gamma(c - 1) Gamma(1 - b) / Gamma(c - b)
  const auto p = ParameterSet::make(1, 0.2, 0.3, {0.9});
  const Complex want = std::tgamma(-0.1) * std::tgamma(0.7) / std::tgamma(0.6);
  EXPECT_LT(rel_err(prefactor_F(p, SubsetIndex::full(1)), want), 1e-13);
}

TEST(PrefactorF, PoleIsDegenerate) {
  const auto p = ParameterSet::make(1, 0.2, 0.3, {1.0});
  try {
    prefactor_F(p, SubsetIndex::empty(1));
    FAIL() << "no exception";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateParameter);
  }
}

TEST(Pairing, ProductNearOrigin) {
  const auto p = ParameterSet::make(1, 0.3, 0.45, {0.7});
  const EvaluationPoint x{{1e-12}};
  const Complex product = pairing_g(p, SubsetIndex::empty(1), x) *
                          pairing_g_dual(p, SubsetIndex::empty(1), x);
  EXPECT_LT(rel_err(product, -19.269051661965723947), 1e-10);
}

} // namespace
} // namespace lauricella
