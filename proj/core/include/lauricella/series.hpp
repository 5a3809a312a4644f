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

#ifndef LAURICELLA_SERIES_HPP
#define LAURICELLA_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lauricella/core.hpp"

namespace lauricella {

using MultiIndex = std::vector<int>;

struct SeriesOptions {
  double rel_tol = 1e-14;
  int cap = 200;          ///< maximal total degree summed
  double abs_floor = 1e-300;
  std::size_t max_terms = 50'000'000; ///< per-layer guard for large m
};

/// A truncated F_C evaluation.
///
/// `order` is the last total degree summed. When `converged` is set the last
/// three layers were below rel_tol relative to the partial sum and
/// tail_estimate <= rel_tol * |value|.
struct SeriesValue {
  Complex value{1.0, 0.0};
  int order = 0;
  double tail_estimate = 0.0;
  bool converged = true;
};

/// T(n + e_k) / T(n) for the F_C term T(n) = A_n x^n:
/// (a + |n|)(b + |n|) x_k / ((c_k + n_k)(n_k + 1)).
/// Throws DegenerateParameter when c_k + n_k == 0.
Complex term_ratio(const ParameterSet &p, std::span<const int> n, int k,
                   Complex x_k);

/// Lauricella F_C(a, b, c; x) summed layer by layer in total degree.
/// Throws Domain outside D_C; reaching the degree cap is reported through
/// `converged == false`.
SeriesValue eval_fc(const ParameterSet &p, const EvaluationPoint &x,
                    const SeriesOptions &options = {});

/// Brute-force partial sum over |n| <= N. Each coefficient is rebuilt from its
/// Pochhammer factors, sharing nothing with eval_fc. Needs N <= 100, m <= 3;
/// no genericity check is made.
Complex direct_sum_oracle(const ParameterSet &p, const EvaluationPoint &x,
                          int max_degree);

} // namespace lauricella

#endif // LAURICELLA_SERIES_HPP
