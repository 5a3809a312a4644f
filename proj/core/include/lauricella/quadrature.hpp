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

#ifndef LAURICELLA_QUADRATURE_HPP
#define LAURICELLA_QUADRATURE_HPP

#include <functional>

#include "lauricella/core.hpp"
#include "lauricella/report.hpp"

namespace lauricella {

struct QuadratureOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-14;
  int min_level = 3;
  int max_level = 10; ///< the step is 2^-level in the tanh-sinh variable
};

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0; ///< difference between the last two levels
  int level = 0;
  bool converged = false;
};

/// Integrand on [0, L] receiving the distances to both ends, so that values
/// near an endpoint are evaluated without cancellation.
using EndpointIntegrand = std::function<Complex(double from_left, double from_right)>;

/// Tanh-sinh (double exponential) quadrature over [0, length].
QuadratureResult tanh_sinh(const EndpointIntegrand &f, double length,
                           const QuadratureOptions &options = {});

/// The m = 1 Euler integral of t^-c (1-t)^(c-a-1) (1-x/t)^-b over the twisted
/// cycle attached to the simplex 0 < t < 1.
///
/// The loaded circle at t = 0 encloses both branch points t = 0 and t = x, so
/// the cycle is realised as the segment [rho, 1] plus the loop |t| = rho,
/// rho = sqrt(x), weighted by 1/(e(-c) - 1). The (1 - t)^(c-a-1) endpoint is
/// flattened by s = v^(1/Re(c-a)).
///
/// Requires 0 < x < 1, Re(c - a) > 0, Re(b) < 1 (ConvergenceCondition
/// otherwise) and c not an integer (DegenerateParameter).
QuadratureResult euler_integral_m1(const ParameterSet &p, double x,
                                   const QuadratureOptions &options = {});

/// Compares euler_integral_m1 with prefactor_F(p, {}) * F_C(a, b, c; x).
RelationReport verify_integral_identity(const ParameterSet &p, double x,
                                        double tolerance = 1e-7,
                                        const QuadratureOptions &options = {});

} // namespace lauricella

#endif // LAURICELLA_QUADRATURE_HPP
