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

#ifndef LAURICELLA_CORE_HPP
#define LAURICELLA_CORE_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lauricella {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kDefaultIntegerTolerance = 1e-6;

/// Distance from z to the nearest integer, |z - round(Re z)|.
double distance_to_integer(Complex z) noexcept;

/// Parameters (a, b, c_1..c_m) of the system E_C; m is the length of c.
struct ParameterSet {
  Complex a;
  Complex b;
  std::vector<Complex> c;

  /// Checked constructor: throws MalformedParameter when m == 0 or
  /// c.size() != m.
  static ParameterSet make(int m, Complex a, Complex b, std::vector<Complex> c);

  int m() const noexcept { return static_cast<int>(c.size()); }
  Complex c_sum() const noexcept;
};

/// A subset I of {0, ..., m-1}, stored as a membership bitmask.
///
/// Axes are zero-based in the API; the canonical rank is the bitmask itself,
/// rank(I) = sum_{i in I} 2^i, which orders the 2^m subsets for matrix and
/// basis indexing.
class SubsetIndex {
public:
  static constexpr int kMaxDimension = 30;

  SubsetIndex() = default;
  SubsetIndex(int m, std::uint32_t mask);

  static SubsetIndex empty(int m) { return SubsetIndex(m, 0u); }
  static SubsetIndex full(int m);
  static SubsetIndex from_rank(int m, std::uint32_t rank) {
    return SubsetIndex(m, rank);
  }
  static SubsetIndex from_members(int m, std::span<const int> members);
  static SubsetIndex from_members(int m, std::initializer_list<int> members) {
    return from_members(m, std::span<const int>(members.begin(), members.size()));
  }

  int dimension() const noexcept { return m_; }
  std::uint32_t rank() const noexcept { return mask_; }
  int size() const noexcept;
  bool contains(int axis) const noexcept {
    return axis >= 0 && axis < m_ && ((mask_ >> axis) & 1u) != 0;
  }

  /// Strictly increasing member list.
  std::vector<int> members() const;
  SubsetIndex complement() const noexcept;
  bool is_proper_subset_of(const SubsetIndex &other) const noexcept;

  /// Sum of c_i over the members.
  Complex sum_over(std::span<const Complex> values) const noexcept;

  /// Human form with 1-based labels, e.g. "{1,3}" or "{}".
  std::string label() const;

  friend bool operator==(const SubsetIndex &, const SubsetIndex &) = default;

private:
  int m_ = 0;
  std::uint32_t mask_ = 0;
};

/// All 2^m subsets in rank order.
std::vector<SubsetIndex> all_subsets(int m);

struct EvaluationPoint {
  std::vector<Complex> x;

  int m() const noexcept { return static_cast<int>(x.size()); }
  /// Membership in D_C: sum_k sqrt|x_k| < 1.
  bool in_domain() const noexcept;
  bool is_origin() const noexcept;
};

/// alpha = e(a), beta = e(b), gamma_k = e(c_k) with e(z) = exp(2 pi i z).
struct ExponentialParameters {
  Complex alpha;
  Complex beta;
  std::vector<Complex> gamma;
};

enum class ViolationKind {
  AMinusSubsetSum, ///< a - sum_{i in I} c_i is (nearly) an integer
  BMinusSubsetSum, ///< b - sum_{i in I} c_i is (nearly) an integer
  CInteger,        ///< c_k is (nearly) an integer
};

struct Violation {
  ViolationKind kind;
  SubsetIndex subset; ///< set for the subset-sum kinds
  int axis = -1;      ///< set for CInteger
  Complex value;
  double distance = 0.0;

  std::string describe() const;
};

struct ValidationVerdict {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Genericity check: every subset I and every c_k is tested against tol_int.
/// Throws MalformedParameter for an empty c, InvalidArgument when tol_int is
/// outside (0, 0.5).
ValidationVerdict validate_parameters(const ParameterSet &p,
                                      double tol_int = kDefaultIntegerTolerance);

/// Throws DegenerateParameter listing every violation, if any.
void require_generic(const ParameterSet &p,
                     double tol_int = kDefaultIntegerTolerance);

/// prod_k x_k * prod_{eps in {+-1}^m} (1 + sum_k eps_k sqrt(x_k)), principal
/// square root. Zero exactly on the singular locus S.
Complex singular_locus_value(const EvaluationPoint &x);

ExponentialParameters exponential_parameters(const ParameterSet &p);

/// exp(2 pi i z), evaluated with the integer part of Re z removed first.
Complex unit_turn(Complex z) noexcept;

} // namespace lauricella

#endif // LAURICELLA_CORE_HPP
