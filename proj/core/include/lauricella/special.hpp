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

#ifndef LAURICELLA_SPECIAL_HPP
#define LAURICELLA_SPECIAL_HPP

#include "lauricella/core.hpp"
#include "lauricella/series.hpp"

namespace lauricella {

/// A logarithm of Gamma(z).
///
/// Lanczos approximation (g = 7, nine coefficients) for Re z >= 0.5, which is
/// the principal log-gamma there; the reflection formula below that, where
/// the imaginary part is only fixed modulo 2 pi. Throws Pole at nonpositive
/// integers.
Complex log_gamma(Complex z);

Complex gamma_function(Complex z);

/// Gamma prefactor relating the integral over the cycle for I to the
/// transformed F_C series:
///   prod_{i in I} G(c_i - 1) prod_{j not in I} G(1 - c_j)
///   * G(sum c - a - m + 1) G(1 - b)
///   / (G(sum_I c - a - r + 1) G(sum_I c - b - r + 1)).
/// Computed as one exponential of a log-gamma sum. Poles raise
/// DegenerateParameter.
Complex prefactor_F(const ParameterSet &p, const SubsetIndex &subset);

/// g_I = prefactor_F * prod_{i in I} x_i^{1 - c_i} * F_C(a_I, b_I, c^I; x).
Complex pairing_g(const ParameterSet &p, const SubsetIndex &subset,
                  const EvaluationPoint &x, const SeriesOptions &options = {});

/// g_I for 1/u, i.e. pairing_g under (a, b, c) -> (2 - a, -b, 2 - c).
Complex pairing_g_dual(const ParameterSet &p, const SubsetIndex &subset,
                       const EvaluationPoint &x,
                       const SeriesOptions &options = {});

} // namespace lauricella

#endif // LAURICELLA_SPECIAL_HPP
