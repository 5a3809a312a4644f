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

#include "lauricella/error.hpp"
#include "lauricella/intersection.hpp"
#include "oracles.hpp"

namespace lauricella {
namespace {

using oracle::rel_err;

const ParameterSet kOne = ParameterSet::make(1, {0.3, 0.1}, {0.45, -0.05}, {{0.7, 0.2}});
const ParameterSet kTwo = ParameterSet::make(2, {0.3, 0.1}, 0.45, {0.7, {0.8, -0.1}});

TEST(HomologyIntersection, OneVariable) {
  EXPECT_LT(rel_err(ih_self(kOne, SubsetIndex::empty(1)), oracle::ih_m1_empty(kOne)),
            1e-12);
  EXPECT_LT(rel_err(ih_self(kOne, SubsetIndex::full(1)), oracle::ih_m1_full(kOne)),
            1e-12);
}

TEST(HomologyIntersection, TwoVariables) {
  EXPECT_LT(rel_err(ih_self(kTwo, SubsetIndex::empty(2)), oracle::ih_m2_empty(kTwo)),
            1e-12);
  EXPECT_LT(rel_err(ih_self(kTwo, SubsetIndex::from_members(2, {0})),
                    oracle::ih_m2_first(kTwo)),
            1e-12);
}

TEST(HomologyIntersection, MatrixIsDiagonal) {
  const auto p = ParameterSet::make(3, 0.3, 0.45, {0.7, 0.8, 0.6});
  const auto h = ih_matrix(p);
  ASSERT_EQ(h.size(), 8u);
  std::vector<Complex> dense(64);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      dense[i * 8 + j] = h.at(i, j);
      if (i != j) {
        EXPECT_EQ(h.at(i, j), Complex(0.0, 0.0));
      }
    }
  }
  EXPECT_LT(rel_err(h.determinant(), oracle::determinant(dense, 8)), 1e-12);
  EXPECT_GT(std::abs(h.determinant()), 0.0);
}

TEST(HomologyIntersection, DegenerateExponent) {
  const auto p = ParameterSet::make(1, 0.3, 1.0, {0.7});
  EXPECT_THROW(ih_self(p, SubsetIndex::empty(1)), Error);
}

TEST(Flags, Enumeration) {
  const auto f1 = enumerate_flags(1);
  ASSERT_EQ(f1.size(), 1u);
  EXPECT_TRUE(f1[0].chain.empty());

  const auto f2 = enumerate_flags(2);
  ASSERT_EQ(f2.size(), 2u);
  EXPECT_EQ(f2[0].chain[0], SubsetIndex::from_members(2, {0}));
  EXPECT_EQ(f2[1].chain[0], SubsetIndex::from_members(2, {1}));

  for (int m = 1; m <= 6; ++m) {
    EXPECT_EQ(enumerate_flags(m).size(), oracle::count_flags_recursive(m)) << m;
  }
}

TEST(CohomologyIntersection, ClosedForms) {
  const Complex two_pi_i{0.0, 2.0 * oracle::kPi};
  const auto &p = kTwo;
  const Complex c1 = p.c[0], c2 = p.c[1];
  const Complex want2 = two_pi_i * two_pi_i *
                        (1.0 / (c1 + c2 - p.a - 1.0) + 1.0 / (p.b + 2.0 - c1 - c2)) *
                        (1.0 / (p.b + 1.0 - c1) + 1.0 / (p.b + 1.0 - c2));
  EXPECT_LT(rel_err(ic_phi_phi(p), want2), 1e-14);

  const Complex c = kOne.c[0];
  const Complex want1 = two_pi_i * (1.0 / (c - kOne.a) + 1.0 / (kOne.b + 1.0 - c));
  EXPECT_LT(rel_err(ic_phi_phi(kOne), want1), 1e-14);
}

TEST(CohomologyIntersection, BruteForceChains) {
  const auto p = ParameterSet::make(4, 0.31, {0.43, 0.1}, {0.67, 0.84, {0.59, 0.2}, 1.37});
  for (int m = 1; m <= 4; ++m) {
    ParameterSet q{p.a, p.b, {p.c.begin(), p.c.begin() + m}};
    EXPECT_LT(rel_err(ic_phi_phi(q), oracle::brute_force_ic(q)), 1e-13) << m;
  }
}

TEST(CohomologyIntersection, OffDiagonalIsZero) {
  EXPECT_EQ(ic_phi_phiprime(), Complex(0.0, 0.0));
}

TEST(CohomologyIntersection, VanishingDenominator) {
  const auto p = ParameterSet::make(1, 0.7, 0.45, {0.7});
  EXPECT_THROW(ic_phi_phi(p), Error);
}

} // namespace
} // namespace lauricella
