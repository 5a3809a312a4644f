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

#ifndef LAURICELLA_REPORT_HPP
#define LAURICELLA_REPORT_HPP

#include <string>
#include <vector>

#include "lauricella/core.hpp"

namespace lauricella {

/// One row of a relation's per-subset term table.
struct RelationTerm {
  SubsetIndex subset;
  Complex value;
};

/// Outcome of checking one identity lhs == rhs.
///
/// residual = |lhs - rhs| / max(|rhs|, largest |term|, floor); pass iff
/// residual <= tolerance.
struct RelationReport {
  std::string identity_name;
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<RelationTerm> terms;
};

inline constexpr double kResidualFloor = 1e-300;

/// Fills residual and verdict from lhs, rhs, and the term table.
void finalize_report(RelationReport &report);

} // namespace lauricella

#endif // LAURICELLA_REPORT_HPP
