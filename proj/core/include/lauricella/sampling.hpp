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

#ifndef LAURICELLA_SAMPLING_HPP
#define LAURICELLA_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "lauricella/core.hpp"

namespace lauricella {

/// Seeded generator with a platform-independent stream: std::mt19937_64
/// is fully specified, and uniforms are built from its top 53 bits instead of
/// std::uniform_real_distribution.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double unit() { return double(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
  std::mt19937_64 engine_;
};

struct ParameterBox {
  double a_lo = -1.0, a_hi = 1.5;
  double b_lo = -1.0, b_hi = 1.5;
  double c_lo = -0.8, c_hi = 2.8;
  double imag = 0.2;   ///< imaginary parts uniform in [-imag, imag]
  double margin = 0.05; ///< genericity margin (distance to the integers)
};

/// Rejection sampling until validate_parameters(p, margin) is clean. The
/// margin also keeps every b_I and every entry of c^I and 2 - c^I at least that
/// far from the poles of the reduced relations.
ParameterSet sample_generic_parameters(Rng &rng, int m,
                                       const ParameterBox &box = {});

/// m = 1 triples inside the convergence region of the Euler integral:
/// Re(c - a) > 0.1 and Re b < 0.9, generic to the box margin.
ParameterSet sample_euler_parameters(Rng &rng, const ParameterBox &box = {});

/// Coordinates uniform in (0, x_max].
EvaluationPoint sample_point(Rng &rng, int m, double x_max);

} // namespace lauricella

#endif // LAURICELLA_SAMPLING_HPP
