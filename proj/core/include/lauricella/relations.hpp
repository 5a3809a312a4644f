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

#ifndef LAURICELLA_RELATIONS_HPP
#define LAURICELLA_RELATIONS_HPP

#include "lauricella/core.hpp"
#include "lauricella/report.hpp"
#include "lauricella/series.hpp"

namespace lauricella {

struct RelationOptions {
  SeriesOptions series;
  double tolerance = 1e-8;
};

/// Quadratic relation between the bases of E_C(a, b, c) and its dual:
///   sum_I (-1)^r (1 - a_I)/b_I F_C(a_I, b_I, c^I; x) F_C(2 - a_I, -b_I, 2 - c^I; x)
///   = (1 - a + b) prod_k (1 - c_k) / (b b_{1..m}) * sum_flags prod_r 1/b_{I^(r)}.
RelationReport tpr1_reduced(const ParameterSet &p, const EvaluationPoint &x,
                            const RelationOptions &options = {});

/// sum_I (-1)^r (a_I - 1) F_C(a_I, b_I, c^I; x) F_C(2 - a_I, 1 - b_I, 2 - c^I; x) = 0.
///
/// Holds for m >= 2. For m = 1 the sum is (c - 1)/(1 - x), which is not zero;
/// the report then fails, as it should.
RelationReport tpr2_reduced(const ParameterSet &p, const EvaluationPoint &x,
                            const RelationOptions &options = {});

/// I_c(phi, phi) = sum_I g_I g_I^vee / I_h(Delta_I, Delta_I^vee), with the
/// Gamma prefactors and power functions kept. x must be positive real.
RelationReport tpr1_raw(const ParameterSet &p, const EvaluationPoint &x,
                        const RelationOptions &options = {});

} // namespace lauricella

#endif // LAURICELLA_RELATIONS_HPP
