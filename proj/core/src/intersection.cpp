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

#include "lauricella/intersection.hpp"

#include <string>

#include "lauricella/error.hpp"

namespace lauricella {

namespace {

void require_nonintegral(Complex z, const std::string &what) {
  if (distance_to_integer(z) <= kDegenerateTolerance) {
    throw Error(ErrorKind::DegenerateParameter,
                what + " is an integer; the intersection number is undefined");
  }
}

void require_nonzero(Complex z, const std::string &what) {
  if (std::abs(z) <= kDegenerateTolerance) {
    throw Error(ErrorKind::DegenerateParameter, what + " vanishes");
  }
}

void extend_flags(int m, int depth, std::uint32_t mask,
                  std::vector<SubsetIndex> &chain, std::vector<Flag> &out) {
  if (depth == m - 1) {
    out.push_back(Flag{chain});
    return;
  }
  for (int e = 0; e < m; ++e) {
    if ((mask >> e) & 1u) {
      continue;
    }
    const std::uint32_t next = mask | (1u << e);
    chain.push_back(SubsetIndex::from_rank(m, next));
    extend_flags(m, depth + 1, next, chain, out);
    chain.pop_back();
  }
}

} // namespace

HomologyIntersectionMatrix::HomologyIntersectionMatrix(
    int m, std::vector<Complex> diagonal)
    : m_(m), diagonal_(std::move(diagonal)) {
  if (diagonal_.size() != (std::size_t{1} << m)) {
    throw Error(ErrorKind::InvalidArgument,
                "intersection matrix needs 2^m diagonal entries");
  }
}

Complex HomologyIntersectionMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= size() || col >= size()) {
    throw Error(ErrorKind::InvalidArgument, "matrix index out of range");
  }
  return row == col ? diagonal_[row] : Complex{0.0, 0.0};
}

Complex HomologyIntersectionMatrix::determinant() const noexcept {
  Complex det{1.0, 0.0};
  for (const auto &d : diagonal_) {
    det *= d;
  }
  return det;
}

Complex ih_self(const ParameterSet &p, const SubsetIndex &subset) {
  if (subset.dimension() != p.m()) {
    throw Error(ErrorKind::InvalidArgument,
                "subset dimension does not match m");
  }
  for (int k = 0; k < p.m(); ++k) {
    require_nonintegral(p.c[static_cast<std::size_t>(k)],
                        "c_" + std::to_string(k + 1));
  }
  require_nonintegral(p.a - p.c_sum(), "a - sum c");
  require_nonintegral(p.b, "b");

  const auto e = exponential_parameters(p);
  Complex gamma_in{1.0, 0.0};
  Complex gamma_out{1.0, 0.0};
  Complex gamma_all{1.0, 0.0};
  Complex den_c{1.0, 0.0};
  for (int k = 0; k < p.m(); ++k) {
    const Complex g = e.gamma[static_cast<std::size_t>(k)];
    (subset.contains(k) ? gamma_in : gamma_out) *= g;
    gamma_all *= g;
    den_c *= g - 1.0;
  }
  const double sign = (subset.size() % 2 == 0) ? 1.0 : -1.0;
  const Complex num = gamma_out * (e.alpha - gamma_in) * (e.beta - gamma_in);
  const Complex den = den_c * (e.alpha - gamma_all) * (e.beta - 1.0);
  return sign * num / den;
}

HomologyIntersectionMatrix ih_matrix(const ParameterSet &p) {
  std::vector<Complex> diagonal;
  for (const auto &subset : all_subsets(p.m())) {
    diagonal.push_back(ih_self(p, subset));
  }
  return HomologyIntersectionMatrix(p.m(), std::move(diagonal));
}

std::vector<Flag> enumerate_flags(int m) {
  if (m < 1 || m > 10) {
    throw Error(ErrorKind::InvalidArgument,
                "flag enumeration supports 1 <= m <= 10");
  }
  std::vector<Flag> out;
  std::vector<SubsetIndex> chain;
  extend_flags(m, 0, 0u, chain, out);
  return out;
}

Complex flag_term(const ParameterSet &p, const Flag &flag) {
  Complex term{1.0, 0.0};
  for (std::size_t r = 0; r < flag.chain.size(); ++r) {
    const auto &subset = flag.chain[r];
    const Complex den = p.b + double(r + 1) - subset.sum_over(p.c);
    require_nonzero(den, "b + r - sum c over I=" + subset.label());
    term /= den;
  }
  return term;
}

Complex flag_sum(const ParameterSet &p) {
  Complex sum{0.0, 0.0};
  for (const auto &flag : enumerate_flags(p.m())) {
    sum += flag_term(p, flag);
  }
  return sum;
}

Complex ic_phi_phi(const ParameterSet &p) {
  const double m = p.m();
  const Complex c_all = p.c_sum();
  const Complex d1 = c_all - p.a - m + 1.0;
  const Complex d2 = p.b + m - c_all;
  require_nonzero(d1, "sum c - a - m + 1");
  require_nonzero(d2, "b + m - sum c");
  Complex scale{1.0, 0.0};
  for (int k = 0; k < p.m(); ++k) {
    scale *= Complex{0.0, 2.0 * kPi};
  }
  return scale * (1.0 / d1 + 1.0 / d2) * flag_sum(p);
}

Complex ic_phi_phiprime() noexcept { return Complex{0.0, 0.0}; }

} // namespace lauricella
