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

#include "lauricella/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lauricella/error.hpp"

namespace lauricella {

namespace {

Complex ratio_at(const ParameterSet &p, int total, int nk, int k, Complex x_k) {
  const Complex ck_shift = p.c[static_cast<std::size_t>(k)] + double(nk);
  if (ck_shift == Complex{0.0, 0.0}) {
    throw Error(ErrorKind::DegenerateParameter,
                "c_" + std::to_string(k + 1) + " + " + std::to_string(nk) +
                    " vanishes in the series recurrence");
  }
  return (p.a + double(total)) * (p.b + double(total)) * x_k /
         (ck_shift * double(nk + 1));
}

void check_dimensions(const ParameterSet &p, const EvaluationPoint &x) {
  if (p.m() == 0) {
    throw Error(ErrorKind::MalformedParameter, "parameter vector c is empty");
  }
  if (x.m() != p.m()) {
    throw Error(ErrorKind::InvalidArgument,
                "evaluation point has " + std::to_string(x.m()) +
                    " coordinates but m = " + std::to_string(p.m()));
  }
}

// One layer of the graded enumeration. Node j owns indices[j*m .. j*m+m).
struct Layer {
  std::vector<Complex> terms;
  std::vector<int> last_axis;
  std::vector<int> indices;
  int degree = 0;
};

} // namespace

Complex term_ratio(const ParameterSet &p, std::span<const int> n, int k,
                   Complex x_k) {
  if (k < 0 || k >= p.m() || static_cast<int>(n.size()) != p.m()) {
    throw Error(ErrorKind::InvalidArgument, "term_ratio: axis or index size");
  }
  const int total = std::accumulate(n.begin(), n.end(), 0);
  return ratio_at(p, total, n[static_cast<std::size_t>(k)], k, x_k);
}

SeriesValue eval_fc(const ParameterSet &p, const EvaluationPoint &x,
                    const SeriesOptions &options) {
  check_dimensions(p, x);
  if (!x.in_domain()) {
    throw Error(ErrorKind::Domain,
                "evaluation point lies outside D_C (sum sqrt|x_k| >= 1)");
  }
  SeriesValue out;
  if (x.is_origin()) {
    return out;
  }

  const int m = p.m();
  std::vector<int> active;
  for (int k = 0; k < m; ++k) {
    if (x.x[static_cast<std::size_t>(k)] != Complex{0.0, 0.0}) {
      active.push_back(k);
    }
  }

  Layer layer;
  layer.terms = {Complex{1.0, 0.0}};
  layer.last_axis = {0};
  layer.indices.assign(static_cast<std::size_t>(m), 0);

  Complex partial{1.0, 0.0};
  double previous_magnitude = 1.0;
  int quiet_layers = 0;

  for (int degree = 1; degree <= options.cap; ++degree) {
    Layer next;
    next.degree = degree;
    const std::size_t parents = layer.terms.size();
    for (std::size_t j = 0; j < parents; ++j) {
      const int *n = &layer.indices[j * static_cast<std::size_t>(m)];
      const Complex parent = layer.terms[j];
      for (int k : active) {
        if (k < layer.last_axis[j]) {
          continue;
        }
        const Complex child =
            parent * ratio_at(p, degree - 1, n[k], k,
                              x.x[static_cast<std::size_t>(k)]);
        next.terms.push_back(child);
        next.last_axis.push_back(k);
        next.indices.insert(next.indices.end(), n, n + m);
        ++next.indices[next.indices.size() - static_cast<std::size_t>(m) +
                       static_cast<std::size_t>(k)];
      }
    }
    if (next.terms.size() > options.max_terms) {
      out.converged = false;
      break;
    }

    Complex layer_sum{0.0, 0.0};
    for (const auto &t : next.terms) {
      layer_sum += t;
    }
    partial += layer_sum;

    const double magnitude = std::abs(layer_sum);
    double q;
    if (previous_magnitude > 0.0) {
      q = std::clamp(magnitude / previous_magnitude, 0.0, 0.99);
    } else {
      q = magnitude > 0.0 ? 0.99 : 0.0;
    }
    previous_magnitude = magnitude;

    out.value = partial;
    out.order = degree;
    out.tail_estimate = magnitude * q / (1.0 - q);

    const double scale = std::abs(partial);
    const bool small = magnitude <= options.rel_tol * scale ||
                       magnitude <= options.abs_floor;
    quiet_layers = small ? quiet_layers + 1 : 0;
    if (quiet_layers >= 3 &&
        (out.tail_estimate <= options.rel_tol * scale ||
         scale < options.abs_floor)) {
      out.converged = true;
      return out;
    }
    layer = std::move(next);
  }
  out.converged = false;
  return out;
}

Complex direct_sum_oracle(const ParameterSet &p, const EvaluationPoint &x,
                          int max_degree) {
  check_dimensions(p, x);
  const int m = p.m();
  if (m > 3 || max_degree < 0 || max_degree > 100) {
    throw Error(ErrorKind::InvalidArgument,
                "direct_sum_oracle supports m <= 3 and 0 <= N <= 100");
  }
  std::vector<int> n(static_cast<std::size_t>(m), 0);
  std::vector<Complex> den;
  std::vector<int> den_axis;
  den.reserve(static_cast<std::size_t>(max_degree));
  den_axis.reserve(static_cast<std::size_t>(max_degree));

  Complex sum{0.0, 0.0};
  while (true) {
    const int total = std::accumulate(n.begin(), n.end(), 0);
    if (total <= max_degree) {
      // Pair the j-th numerator factor (a+j)(b+j) with the j-th denominator
      // factor (c_k+i)(i+1) and one power of x_k so the running product stays
      // in range.
      den.clear();
      den_axis.clear();
      for (int k = 0; k < m; ++k) {
        for (int i = 0; i < n[static_cast<std::size_t>(k)]; ++i) {
          den.push_back((p.c[static_cast<std::size_t>(k)] + double(i)) *
                        double(i + 1));
          den_axis.push_back(k);
        }
      }
      Complex term{1.0, 0.0};
      for (int j = 0; j < total; ++j) {
        const auto idx = static_cast<std::size_t>(j);
        term *= (p.a + double(j)) * (p.b + double(j)) *
                x.x[static_cast<std::size_t>(den_axis[idx])] / den[idx];
      }
      sum += term;
    }
    int k = 0;
    while (k < m) {
      if (++n[static_cast<std::size_t>(k)] <= max_degree) {
        break;
      }
      n[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == m) {
      break;
    }
  }
  return sum;
}

} // namespace lauricella
