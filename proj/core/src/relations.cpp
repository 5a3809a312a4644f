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

#include "lauricella/relations.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "lauricella/basis.hpp"
#include "lauricella/error.hpp"
#include "lauricella/intersection.hpp"
#include "lauricella/special.hpp"

namespace lauricella {

void finalize_report(RelationReport &report) {
  double scale = std::max(std::abs(report.rhs), kResidualFloor);
  for (const auto &term : report.terms) {
    scale = std::max(scale, std::abs(term.value));
  }
  report.residual = std::abs(report.lhs - report.rhs) / scale;
  report.pass = report.residual <= report.tolerance;
}

namespace {

constexpr double kPoleGuard = 1e-12;

bool near_nonpositive_integer(Complex z) {
  return z.real() < 0.5 && distance_to_integer(z) <= kPoleGuard;
}

void require_series_parameters(const std::vector<Complex> &c,
                               const SubsetIndex &subset, const char *which) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (near_nonpositive_integer(c[k])) {
      throw Error(ErrorKind::DegenerateParameter,
                  std::string(which) + " entry " + std::to_string(k + 1) +
                      " for I=" + subset.label() +
                      " is a nonpositive integer");
    }
  }
}

void require_dimensions(const ParameterSet &p, const EvaluationPoint &x) {
  if (p.m() == 0) {
    throw Error(ErrorKind::MalformedParameter, "parameter vector c is empty");
  }
  if (x.m() != p.m()) {
    throw Error(ErrorKind::InvalidArgument,
                "evaluation point dimension does not match m");
  }
}

// Both F_C factors of one subset term in the reduced relations.
struct SubsetPair {
  LocalSolutionSpec spec;
  SeriesValue primal;
  SeriesValue dual;
};

SubsetPair evaluate_pair(const ParameterSet &p, const SubsetIndex &subset,
                         const EvaluationPoint &x, Complex dual_b_offset,
                         const SeriesOptions &options) {
  SubsetPair pair;
  pair.spec = transform_parameters(p, subset);
  const auto companion = dual_companion(p, subset);
  require_series_parameters(pair.spec.c_I, subset, "c^I");
  require_series_parameters(companion, subset, "2 - c^I");
  pair.primal = eval_fc(pair.spec.transformed(), x, options);
  const ParameterSet dual{2.0 - pair.spec.a_I, dual_b_offset - pair.spec.b_I,
                          companion};
  pair.dual = eval_fc(dual, x, options);
  return pair;
}

double parity(const SubsetIndex &subset) {
  return subset.size() % 2 == 0 ? 1.0 : -1.0;
}

} // namespace

RelationReport tpr1_reduced(const ParameterSet &p, const EvaluationPoint &x,
                            const RelationOptions &options) {
  require_dimensions(p, x);
  RelationReport report;
  report.identity_name = "tpr1_reduced";
  report.tolerance = options.tolerance;
  bool converged = true;

  Complex lhs{0.0, 0.0};
  for (const auto &subset : all_subsets(p.m())) {
    const Complex b_I = transform_parameters(p, subset).b_I;
    if (std::abs(b_I) <= kPoleGuard) {
      throw Error(ErrorKind::DegenerateParameter,
                  "b_I vanishes for I=" + subset.label());
    }
    const auto pair = evaluate_pair(p, subset, x, 0.0, options.series);
    converged = converged && pair.primal.converged && pair.dual.converged;
    const Complex term = parity(subset) * (1.0 - pair.spec.a_I) / b_I *
                         pair.primal.value * pair.dual.value;
    report.terms.push_back({subset, term});
    lhs += term;
  }

  const Complex b_full = transform_parameters(p, SubsetIndex::full(p.m())).b_I;
  if (std::abs(p.b) <= kPoleGuard || std::abs(b_full) <= kPoleGuard) {
    throw Error(ErrorKind::DegenerateParameter,
                "b or b_{1..m} vanishes in the right-hand side");
  }
  Complex c_product{1.0, 0.0};
  for (const auto &ck : p.c) {
    c_product *= 1.0 - ck;
  }
  report.lhs = lhs;
  report.rhs = (1.0 - p.a + p.b) * c_product / (p.b * b_full) * flag_sum(p);
  finalize_report(report);
  report.pass = report.pass && converged;
  return report;
}

RelationReport tpr2_reduced(const ParameterSet &p, const EvaluationPoint &x,
                            const RelationOptions &options) {
  require_dimensions(p, x);
  RelationReport report;
  report.identity_name = "tpr2_reduced";
  report.tolerance = options.tolerance;
  bool converged = true;

  Complex lhs{0.0, 0.0};
  for (const auto &subset : all_subsets(p.m())) {
    const auto pair = evaluate_pair(p, subset, x, 1.0, options.series);
    converged = converged && pair.primal.converged && pair.dual.converged;
    const Complex term = parity(subset) * (pair.spec.a_I - 1.0) *
                         pair.primal.value * pair.dual.value;
    report.terms.push_back({subset, term});
    lhs += term;
  }
  report.lhs = lhs;
  report.rhs = Complex{0.0, 0.0};
  finalize_report(report);
  report.pass = report.pass && converged;
  return report;
}

RelationReport tpr1_raw(const ParameterSet &p, const EvaluationPoint &x,
                        const RelationOptions &options) {
  require_dimensions(p, x);
  for (const auto &xk : x.x) {
    if (xk.imag() != 0.0 || !(xk.real() > 0.0)) {
      throw Error(ErrorKind::InvalidArgument,
                  "tpr1_raw needs positive real coordinates");
    }
  }
  RelationReport report;
  report.identity_name = "tpr1_raw";
  report.tolerance = options.tolerance;

  Complex rhs{0.0, 0.0};
  for (const auto &subset : all_subsets(p.m())) {
    const Complex g = pairing_g(p, subset, x, options.series);
    const Complex g_dual = pairing_g_dual(p, subset, x, options.series);
    const Complex term = g * g_dual / ih_self(p, subset);
    report.terms.push_back({subset, term});
    rhs += term;
  }
  report.lhs = ic_phi_phi(p);
  report.rhs = rhs;
  finalize_report(report);
  return report;
}

} // namespace lauricella
