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

#include "lauricella/basis.hpp"

#include <string>

#include "lauricella/error.hpp"

namespace lauricella {

LocalSolutionSpec transform_parameters(const ParameterSet &p,
                                       const SubsetIndex &subset) {
  if (subset.dimension() != p.m()) {
    throw Error(ErrorKind::InvalidArgument,
                "subset dimension does not match m");
  }
  const double r = subset.size();
  const Complex shift = r - subset.sum_over(p.c);

  LocalSolutionSpec spec;
  spec.subset = subset;
  spec.a_I = p.a + shift;
  spec.b_I = p.b + shift;
  spec.c_I = p.c;
  spec.prefactor_exponents.assign(p.c.size(), Complex{0.0, 0.0});
  for (int i : subset.members()) {
    const auto idx = static_cast<std::size_t>(i);
    spec.c_I[idx] = 2.0 - p.c[idx];
    spec.prefactor_exponents[idx] = 1.0 - p.c[idx];
  }
  return spec;
}

ParameterSet dual_parameters(const ParameterSet &p) {
  ParameterSet out{2.0 - p.a, -p.b, p.c};
  for (auto &ck : out.c) {
    ck = 2.0 - ck;
  }
  return out;
}

std::vector<Complex> dual_companion(const ParameterSet &p,
                                    const SubsetIndex &subset) {
  auto out = transform_parameters(p, subset).c_I;
  for (auto &v : out) {
    v = 2.0 - v;
  }
  return out;
}

Complex power_prefactor(const EvaluationPoint &x, const SubsetIndex &subset,
                        const std::vector<Complex> &exponents) {
  Complex value{1.0, 0.0};
  for (int i : subset.members()) {
    const auto idx = static_cast<std::size_t>(i);
    if (x.x[idx] == Complex{0.0, 0.0}) {
      throw Error(ErrorKind::PrefactorSingularity,
                  "x_" + std::to_string(i + 1) +
                      " = 0 makes the power prefactor of f_" + subset.label() +
                      " singular");
    }
    value *= std::pow(x.x[idx], exponents[idx]);
  }
  return value;
}

SeriesValue eval_local_solution(const ParameterSet &p,
                                const SubsetIndex &subset,
                                const EvaluationPoint &x,
                                const SeriesOptions &options) {
  if (x.m() != p.m()) {
    throw Error(ErrorKind::InvalidArgument,
                "evaluation point dimension does not match m");
  }
  const auto spec = transform_parameters(p, subset);
  const Complex prefactor = power_prefactor(x, subset, spec.prefactor_exponents);
  auto series = eval_fc(spec.transformed(), x, options);
  series.value *= prefactor;
  series.tail_estimate *= std::abs(prefactor);
  return series;
}

std::vector<LocalSolutionSpec> enumerate_basis(const ParameterSet &p) {
  std::vector<LocalSolutionSpec> out;
  for (const auto &subset : all_subsets(p.m())) {
    out.push_back(transform_parameters(p, subset));
  }
  return out;
}

} // namespace lauricella
