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

#include "lauricella/core.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "lauricella/error.hpp"

namespace lauricella {

const char *to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::MalformedParameter:
    return "malformed-parameter";
  case ErrorKind::DegenerateParameter:
    return "degenerate-parameter";
  case ErrorKind::Domain:
    return "domain";
  case ErrorKind::Pole:
    return "pole";
  case ErrorKind::PrefactorSingularity:
    return "prefactor-singularity";
  case ErrorKind::ConvergenceCondition:
    return "convergence-condition";
  case ErrorKind::InvalidArgument:
    return "invalid-argument";
  }
  return "unknown";
}

double distance_to_integer(Complex z) noexcept {
  return std::abs(z - std::round(z.real()));
}

ParameterSet ParameterSet::make(int m, Complex a, Complex b,
                                std::vector<Complex> c) {
  if (m <= 0) {
    throw Error(ErrorKind::MalformedParameter,
                "dimension m must be positive, got " + std::to_string(m));
  }
  if (static_cast<int>(c.size()) != m) {
    throw Error(ErrorKind::MalformedParameter,
                "c has " + std::to_string(c.size()) + " entries but m = " +
                    std::to_string(m));
  }
  if (m > SubsetIndex::kMaxDimension) {
    throw Error(ErrorKind::MalformedParameter, "dimension m is too large");
  }
  return ParameterSet{a, b, std::move(c)};
}

Complex ParameterSet::c_sum() const noexcept {
  Complex s{0.0, 0.0};
  for (const auto &ck : c) {
    s += ck;
  }
  return s;
}

SubsetIndex::SubsetIndex(int m, std::uint32_t mask) : m_(m), mask_(mask) {
  if (m < 0 || m > kMaxDimension) {
    throw Error(ErrorKind::InvalidArgument, "subset dimension out of range");
  }
  if (m < 32 && (mask >> m) != 0u) {
    throw Error(ErrorKind::InvalidArgument,
                "subset rank " + std::to_string(mask) + " exceeds 2^m - 1");
  }
}

SubsetIndex SubsetIndex::full(int m) {
  return SubsetIndex(m, m == 0 ? 0u : ((1u << m) - 1u));
}

SubsetIndex SubsetIndex::from_members(int m, std::span<const int> members) {
  std::uint32_t mask = 0;
  for (int i : members) {
    if (i < 0 || i >= m) {
      throw Error(ErrorKind::InvalidArgument,
                  "subset member " + std::to_string(i) + " outside [0, m)");
    }
    if ((mask >> i) & 1u) {
      throw Error(ErrorKind::InvalidArgument, "repeated subset member");
    }
    mask |= 1u << i;
  }
  return SubsetIndex(m, mask);
}

int SubsetIndex::size() const noexcept { return std::popcount(mask_); }

std::vector<int> SubsetIndex::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < m_; ++i) {
    if (contains(i)) {
      out.push_back(i);
    }
  }
  return out;
}

SubsetIndex SubsetIndex::complement() const noexcept {
  SubsetIndex out;
  out.m_ = m_;
  out.mask_ = full(m_).mask_ & ~mask_;
  return out;
}

bool SubsetIndex::is_proper_subset_of(const SubsetIndex &other) const noexcept {
  return (mask_ & ~other.mask_) == 0u && mask_ != other.mask_;
}

Complex SubsetIndex::sum_over(std::span<const Complex> values) const noexcept {
  Complex s{0.0, 0.0};
  for (int i = 0; i < m_ && i < static_cast<int>(values.size()); ++i) {
    if (contains(i)) {
      s += values[static_cast<std::size_t>(i)];
    }
  }
  return s;
}

std::string SubsetIndex::label() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) {
      out += ',';
    }
    out += std::to_string(i + 1);
    first = false;
  }
  out += '}';
  return out;
}

std::vector<SubsetIndex> all_subsets(int m) {
  if (m < 0 || m > SubsetIndex::kMaxDimension) {
    throw Error(ErrorKind::InvalidArgument, "subset dimension out of range");
  }
  std::vector<SubsetIndex> out;
  const std::uint32_t count = 1u << m;
  out.reserve(count);
  for (std::uint32_t rank = 0; rank < count; ++rank) {
    out.push_back(SubsetIndex::from_rank(m, rank));
  }
  return out;
}

bool EvaluationPoint::in_domain() const noexcept {
  double s = 0.0;
  for (const auto &xk : x) {
    s += std::sqrt(std::abs(xk));
  }
  return s < 1.0;
}

bool EvaluationPoint::is_origin() const noexcept {
  for (const auto &xk : x) {
    if (xk != Complex{0.0, 0.0}) {
      return false;
    }
  }
  return true;
}

std::string Violation::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
  case ViolationKind::AMinusSubsetSum:
    os << "a - sum c over I=" << subset.label();
    break;
  case ViolationKind::BMinusSubsetSum:
    os << "b - sum c over I=" << subset.label();
    break;
  case ViolationKind::CInteger:
    os << "c_" << (axis + 1);
    break;
  }
  os << " = (" << value.real() << "," << value.imag()
     << ") is within " << distance << " of an integer";
  return os.str();
}

ValidationVerdict validate_parameters(const ParameterSet &p, double tol_int) {
  if (p.m() == 0) {
    throw Error(ErrorKind::MalformedParameter, "parameter vector c is empty");
  }
  if (p.m() > SubsetIndex::kMaxDimension) {
    throw Error(ErrorKind::MalformedParameter, "dimension m is too large");
  }
  if (!(tol_int > 0.0 && tol_int < 0.5)) {
    throw Error(ErrorKind::InvalidArgument, "tol_int must lie in (0, 0.5)");
  }
  ValidationVerdict verdict;
  for (const auto &subset : all_subsets(p.m())) {
    const Complex s = subset.sum_over(p.c);
    const Complex a_shift = p.a - s;
    const Complex b_shift = p.b - s;
    if (double d = distance_to_integer(a_shift); d <= tol_int) {
      verdict.violations.push_back(
          {ViolationKind::AMinusSubsetSum, subset, -1, a_shift, d});
    }
    if (double d = distance_to_integer(b_shift); d <= tol_int) {
      verdict.violations.push_back(
          {ViolationKind::BMinusSubsetSum, subset, -1, b_shift, d});
    }
  }
  for (int k = 0; k < p.m(); ++k) {
    const Complex ck = p.c[static_cast<std::size_t>(k)];
    if (double d = distance_to_integer(ck); d <= tol_int) {
      verdict.violations.push_back(
          {ViolationKind::CInteger, SubsetIndex::empty(p.m()), k, ck, d});
    }
  }
  return verdict;
}

void require_generic(const ParameterSet &p, double tol_int) {
  const auto verdict = validate_parameters(p, tol_int);
  if (verdict.ok()) {
    return;
  }
  std::string msg = "non-generic parameters:";
  for (const auto &v : verdict.violations) {
    msg += "\n  " + v.describe();
  }
  throw Error(ErrorKind::DegenerateParameter, msg);
}

Complex singular_locus_value(const EvaluationPoint &x) {
  const int m = x.m();
  Complex value{1.0, 0.0};
  std::vector<Complex> roots;
  roots.reserve(x.x.size());
  for (const auto &xk : x.x) {
    value *= xk;
    roots.push_back(std::sqrt(xk));
  }
  if (m > 20) {
    throw Error(ErrorKind::InvalidArgument,
                "singular locus product over 2^m sign vectors needs m <= 20");
  }
  const std::uint32_t count = 1u << m;
  for (std::uint32_t signs = 0; signs < count; ++signs) {
    Complex factor{1.0, 0.0};
    for (int k = 0; k < m; ++k) {
      const auto &root = roots[static_cast<std::size_t>(k)];
      factor += ((signs >> k) & 1u) ? -root : root;
    }
    value *= factor;
  }
  return value;
}

Complex unit_turn(Complex z) noexcept {
  const double shift = std::round(z.real());
  const Complex w = z - shift;
  return std::exp(Complex{0.0, 2.0 * kPi} * w);
}

ExponentialParameters exponential_parameters(const ParameterSet &p) {
  ExponentialParameters out;
  out.alpha = unit_turn(p.a);
  out.beta = unit_turn(p.b);
  out.gamma.reserve(p.c.size());
  for (const auto &ck : p.c) {
    out.gamma.push_back(unit_turn(ck));
  }
  return out;
}

} // namespace lauricella
