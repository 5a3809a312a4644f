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

#ifndef LAURICELLA_BASIS_HPP
#define LAURICELLA_BASIS_HPP

#include <vector>

#include "lauricella/core.hpp"
#include "lauricella/series.hpp"

namespace lauricella {

/// Parameters of the local solution
///   f_I = prod_{i in I} x_i^{1 - c_i} * F_C(a_I, b_I, c^I; x),
/// with a_I = a + r - sum_{i in I} c_i, b_I likewise, and c^I obtained from c
/// by replacing c_i with 2 - c_i for i in I.
struct LocalSolutionSpec {
  SubsetIndex subset;
  Complex a_I;
  Complex b_I;
  std::vector<Complex> c_I;
  /// 1 - c_i on members of I, 0 elsewhere.
  std::vector<Complex> prefactor_exponents;

  ParameterSet transformed() const { return ParameterSet{a_I, b_I, c_I}; }
};

LocalSolutionSpec transform_parameters(const ParameterSet &p,
                                       const SubsetIndex &subset);

/// (a, b, c) -> (2 - a, -b, (2, ..., 2) - c): the parameters of 1/u.
ParameterSet dual_parameters(const ParameterSet &p);

/// The companion vector (2, ..., 2) - c^I.
std::vector<Complex> dual_companion(const ParameterSet &p,
                                    const SubsetIndex &subset);

/// prod_{i in I} x_i^{exponent_i} with the principal branch.
/// Throws PrefactorSingularity when some x_i with i in I is zero.
Complex power_prefactor(const EvaluationPoint &x, const SubsetIndex &subset,
                        const std::vector<Complex> &exponents);

/// f_I(x). The tail estimate is scaled by |prefactor|.
SeriesValue eval_local_solution(const ParameterSet &p,
                                const SubsetIndex &subset,
                                const EvaluationPoint &x,
                                const SeriesOptions &options = {});

/// All 2^m specs in rank order.
std::vector<LocalSolutionSpec> enumerate_basis(const ParameterSet &p);

} // namespace lauricella

#endif // LAURICELLA_BASIS_HPP
