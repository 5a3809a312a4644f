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

#ifndef LAURICELLA_INTERSECTION_HPP
#define LAURICELLA_INTERSECTION_HPP

#include <cstddef>
#include <vector>

#include "lauricella/core.hpp"

namespace lauricella {

/// Distance to an integer below which an exponent is treated as integral and
/// a closed-form intersection number is reported as degenerate.
inline constexpr double kDegenerateTolerance = 1e-12;

/// Intersection matrix I_h(Delta_I, Delta_J^vee), rows and columns indexed by
/// subset rank. The matrix is diagonal; only the diagonal is stored.
class HomologyIntersectionMatrix {
public:
  HomologyIntersectionMatrix(int m, std::vector<Complex> diagonal);

  int dimension() const noexcept { return m_; }
  std::size_t size() const noexcept { return diagonal_.size(); }
  Complex at(std::size_t row, std::size_t col) const;
  const std::vector<Complex> &diagonal() const noexcept { return diagonal_; }
  /// Product of the diagonal.
  Complex determinant() const noexcept;

private:
  int m_;
  std::vector<Complex> diagonal_;
};

/// Self-intersection number of the cycle Delta_I:
///   (-1)^r prod_{j not in I} gamma_j (alpha - gamma_I)(beta - gamma_I)
///   / (prod_k (gamma_k - 1) (alpha - gamma_all)(beta - 1)),
/// where gamma_I = prod_{i in I} gamma_i.
Complex ih_self(const ParameterSet &p, const SubsetIndex &subset);

HomologyIntersectionMatrix ih_matrix(const ParameterSet &p);

/// A chain I^(1) < I^(2) < ... < I^(m-1) of proper nonempty subsets with
/// |I^(r)| = r. For m = 1 the chain is empty.
struct Flag {
  std::vector<SubsetIndex> chain;
};

/// All m! flags, ordered lexicographically by the sequence of added elements.
std::vector<Flag> enumerate_flags(int m);

/// prod_{r=1}^{m-1} 1 / (b + r - sum_{i in I^(r)} c_i); 1 for the empty flag.
Complex flag_term(const ParameterSet &p, const Flag &flag);

/// Sum of flag_term over enumerate_flags(m).
Complex flag_sum(const ParameterSet &p);

/// I_c(phi, phi) = (2 pi i)^m (1/(sum c - a - m + 1) + 1/(b + m - sum c))
///                 * flag_sum(p).
Complex ic_phi_phi(const ParameterSet &p);

/// I_c(phi, phi') from the closed form: identically zero.
///
/// NOTE: the vanishing argument needs m common pole divisors of phi and phi';
/// they share only v = 0, so for m = 1 the true pairing is nonzero. Zero is
/// still returned; see tpr2_reduced for the consequence.
Complex ic_phi_phiprime() noexcept;

} // namespace lauricella

#endif // LAURICELLA_INTERSECTION_HPP
