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

#include "lauricella/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "lauricella/error.hpp"
#include "lauricella/series.hpp"
#include "lauricella/special.hpp"

namespace lauricella {

namespace {

// Beyond |s| = 4.5 the node distances fall below 1e-60 of the interval.
constexpr double kTanhSinhRange = 4.5;

struct Node {
  double from_left;
  double from_right;
  double weight;
};

Node tanh_sinh_node(double s, double length) {
  const double u = 0.5 * kPi * std::sinh(s);
  const double cosh_u = std::cosh(u);
  Node node;
  node.from_left = length / (1.0 + std::exp(-2.0 * u));
  node.from_right = length / (1.0 + std::exp(2.0 * u));
  node.weight = 0.5 * length * 0.5 * kPi * std::cosh(s) / (cosh_u * cosh_u);
  return node;
}

Complex level_sum(const EndpointIntegrand &f, double length, double h,
                  bool odd_only) {
  Complex sum{0.0, 0.0};
  const auto count = static_cast<long>(std::ceil(kTanhSinhRange / h));
  const long start = odd_only ? 1 : 0;
  const long stride = odd_only ? 2 : 1;
  for (long j = start; j <= count; j += stride) {
    for (int side = 0; side < (j == 0 ? 1 : 2); ++side) {
      const double s = (side == 0 ? 1.0 : -1.0) * double(j) * h;
      const Node node = tanh_sinh_node(s, length);
      if (node.from_left <= 0.0 || node.from_right <= 0.0 ||
          node.weight == 0.0) {
        continue;
      }
      sum += node.weight * f(node.from_left, node.from_right);
    }
  }
  return sum;
}

} // namespace

QuadratureResult tanh_sinh(const EndpointIntegrand &f, double length,
                           const QuadratureOptions &options) {
  if (!(length > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "quadrature interval is empty");
  }
  QuadratureResult result;
  double h = 1.0;
  Complex raw = level_sum(f, length, h, false);
  Complex estimate = h * raw;
  for (int level = 1; level <= options.max_level; ++level) {
    h *= 0.5;
    raw += level_sum(f, length, h, true);
    const Complex refined = h * raw;
    result.error_estimate = std::abs(refined - estimate);
    result.value = refined;
    result.level = level;
    estimate = refined;
    const double target =
        std::max(options.abs_tol, options.rel_tol * std::abs(refined));
    if (level >= options.min_level && result.error_estimate <= target) {
      result.converged = true;
      return result;
    }
  }
  return result;
}

QuadratureResult euler_integral_m1(const ParameterSet &p, double x,
                                   const QuadratureOptions &options) {
  if (p.m() != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "the Euler integral oracle is implemented for m = 1");
  }
  const Complex a = p.a;
  const Complex b = p.b;
  const Complex c = p.c[0];
  if (!(x > 0.0 && x < 1.0)) {
    throw Error(ErrorKind::ConvergenceCondition, "Euler integral needs 0 < x < 1");
  }
  const Complex lambda = c - a - 1.0;
  const double mu = lambda.real() + 1.0;
  if (!(mu > 0.0)) {
    throw Error(ErrorKind::ConvergenceCondition,
                "Euler integral needs Re(c - a) > 0");
  }
  if (!(b.real() < 1.0)) {
    throw Error(ErrorKind::ConvergenceCondition, "Euler integral needs Re(b) < 1");
  }
  if (distance_to_integer(c) <= 1e-12) {
    throw Error(ErrorKind::DegenerateParameter,
                "c is an integer; the loop around t = 0 has trivial monodromy");
  }

  const double rho = std::sqrt(x);
  const double span = 1.0 - rho;
  const double v_end = std::pow(span, mu);
  const double omega = lambda.imag() / mu;

  // Segment [rho, 1] in the flattened variable v, s = 1 - t = v^(1/mu).
  const EndpointIntegrand segment = [&](double v, double /*to_end*/) {
    const double log_v = std::log(v);
    const double s = std::exp(log_v / mu);
    const double t = 1.0 - s;
    const Complex flat = std::exp(Complex{0.0, omega * log_v}) / mu;
    const Complex t_part = std::exp(-c * std::log(t));
    const Complex w_part = std::exp(-b * std::log1p(-x / t));
    return flat * t_part * w_part;
  };

  // Loop t = rho e^{i theta}; t^-c is continued in theta, the other two
  // factors stay on their principal branches because |t| < 1 and |x/t| < 1.
  const EndpointIntegrand loop = [&](double theta, double /*to_end*/) {
    const Complex e_theta = std::exp(Complex{0.0, theta});
    const Complex t = rho * e_theta;
    const Complex t_part =
        std::exp(-c * Complex{std::log(rho), theta});
    const Complex v_part = std::pow(1.0 - t, lambda);
    const Complex w_part = std::pow(1.0 - (x / rho) * std::conj(e_theta), -b);
    return t_part * v_part * w_part * Complex{0.0, 1.0} * t;
  };

  const auto seg = tanh_sinh(segment, v_end, options);
  const auto circle = tanh_sinh(loop, 2.0 * kPi, options);
  const Complex weight = 1.0 / (unit_turn(-c) - 1.0);

  QuadratureResult out;
  out.value = seg.value + weight * circle.value;
  out.error_estimate = seg.error_estimate + std::abs(weight) * circle.error_estimate;
  out.level = std::max(seg.level, circle.level);
  out.converged = seg.converged && circle.converged;
  return out;
}

RelationReport verify_integral_identity(const ParameterSet &p, double x,
                                        double tolerance,
                                        const QuadratureOptions &options) {
  RelationReport report;
  report.identity_name = "euler_integral_m1";
  report.tolerance = tolerance;
  const auto quad = euler_integral_m1(p, x, options);
  const EvaluationPoint point{{Complex{x, 0.0}}};
  const auto series = eval_fc(p, point);
  report.lhs = quad.value;
  report.rhs = prefactor_F(p, SubsetIndex::empty(1)) * series.value;
  finalize_report(report);
  if (!quad.converged || !series.converged) {
    report.pass = false;
  }
  return report;
}

} // namespace lauricella
