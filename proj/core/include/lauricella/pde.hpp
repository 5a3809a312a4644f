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

#ifndef LAURICELLA_PDE_HPP
#define LAURICELLA_PDE_HPP

#include <map>

#include "lauricella/core.hpp"
#include "lauricella/series.hpp"

namespace lauricella {

/// Polynomial in m variables with coefficients for total degrees <= degree.
class TruncatedPolynomial {
public:
  TruncatedPolynomial(int m, int degree);

  int dimension() const noexcept { return m_; }
  int degree() const noexcept { return degree_; }

  Complex coefficient(const MultiIndex &n) const;
  /// Adds to the coefficient of x^n; monomials above the degree are dropped.
  void add(const MultiIndex &n, Complex value);

  const std::map<MultiIndex, Complex> &terms() const noexcept { return terms_; }

  TruncatedPolynomial &operator+=(const TruncatedPolynomial &other);
  friend TruncatedPolynomial operator+(TruncatedPolynomial lhs,
                                       const TruncatedPolynomial &rhs) {
    lhs += rhs;
    return lhs;
  }

private:
  int m_;
  int degree_;
  std::map<MultiIndex, Complex> terms_;
};

/// Coefficients A_n of F_C(a, b, c; x) for |n| <= degree.
TruncatedPolynomial fc_truncation(const ParameterSet &p, int degree);

/// The k-th operator of E_C(a, b, c),
///   x_k (1 - x_k) d_k^2 - x_k sum_{i != k} x_i d_i d_k
///   - sum_{i != k} sum_j x_i x_j d_i d_j + (c_k - (a + b + 1) x_k) d_k
///   - (a + b + 1) sum_{i != k} x_i d_i - ab,
/// applied coefficientwise. The result is exact through degree N - 1 and is
/// returned with that degree.
TruncatedPolynomial apply_ec_operator(const ParameterSet &p, int k,
                                      const TruncatedPolynomial &f);

/// Largest residual coefficient of all m operators applied to
/// fc_truncation(p, N) over degrees <= N - 2, each degree normalized by the
/// largest |A_n| of that degree. Needs N >= 3.
double pde_residual(const ParameterSet &p, int degree);

} // namespace lauricella

#endif // LAURICELLA_PDE_HPP
