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

#include "lauricella/sampling.hpp"

#include "lauricella/error.hpp"

namespace lauricella {

ParameterSet sample_generic_parameters(Rng &rng, int m, const ParameterBox &box) {
  if (m < 1 || m > SubsetIndex::kMaxDimension) {
    throw Error(ErrorKind::MalformedParameter, "sampling needs m >= 1");
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto draw = [&](double lo, double hi) {
      const double re = rng.uniform(lo, hi);
      const double im = box.imag > 0.0 ? rng.uniform(-box.imag, box.imag) : 0.0;
      return Complex{re, im};
    };
    ParameterSet p;
    p.a = draw(box.a_lo, box.a_hi);
    p.b = draw(box.b_lo, box.b_hi);
    p.c.resize(static_cast<std::size_t>(m));
    for (auto &ck : p.c) {
      ck = draw(box.c_lo, box.c_hi);
    }
    if (validate_parameters(p, box.margin).ok()) {
      return p;
    }
  }
  throw Error(ErrorKind::InvalidArgument,
              "could not draw generic parameters from the given box");
}

ParameterSet sample_euler_parameters(Rng &rng, const ParameterBox &box) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto imag = [&] {
      return box.imag > 0.0 ? rng.uniform(-box.imag, box.imag) : 0.0;
    };
    const Complex c{rng.uniform(box.c_lo, box.c_hi), imag()};
    const Complex a{c.real() - rng.uniform(0.1, 1.6), imag()};
    const Complex b{rng.uniform(box.b_lo, 0.9), imag()};
    ParameterSet p{a, b, {c}};
    if ((c - a).real() > 0.1 && validate_parameters(p, box.margin).ok() &&
        distance_to_integer(c - a) > box.margin) {
      return p;
    }
  }
  throw Error(ErrorKind::InvalidArgument,
              "could not draw Euler-integral parameters from the given box");
}

EvaluationPoint sample_point(Rng &rng, int m, double x_max) {
  EvaluationPoint x;
  x.x.resize(static_cast<std::size_t>(m));
  for (auto &xk : x.x) {
    xk = Complex{x_max * (1.0 - rng.unit()), 0.0};
  }
  return x;
}

} // namespace lauricella
