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

#include "lauricella/special.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "lauricella/basis.hpp"
#include "lauricella/error.hpp"

namespace lauricella {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLogTwoPi = 0.5 * std::log(2.0 * kPi);
const double kLogPi = std::log(kPi);

bool is_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::round(z.real());
}

Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex sum{kLanczos[0], 0.0};
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + double(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(pi z) with the integer part of Re z removed before the sine.
Complex log_sin_pi(Complex z) {
  const double n = std::round(z.real());
  const Complex w = z - n;
  Complex log_sin = std::log(std::sin(kPi * w));
  if (std::fmod(std::abs(n), 2.0) == 1.0) {
    log_sin += Complex{0.0, kPi};
  }
  return log_sin;
}

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

} // namespace

Complex log_gamma(Complex z) {
  if (is_pole(z)) {
    throw Error(ErrorKind::Pole, "Gamma has a pole at " + describe(z));
  }
  if (z.real() < 0.5) {
    return kLogPi - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
  }
  return lanczos_log_gamma(z);
}

Complex gamma_function(Complex z) { return std::exp(log_gamma(z)); }

Complex prefactor_F(const ParameterSet &p, const SubsetIndex &subset) {
  if (subset.dimension() != p.m()) {
    throw Error(ErrorKind::InvalidArgument,
                "subset dimension does not match m");
  }
  const double m = p.m();
  const double r = subset.size();
  const Complex c_all = p.c_sum();
  const Complex c_in = subset.sum_over(p.c);
  try {
    Complex log_value{0.0, 0.0};
    for (int k = 0; k < p.m(); ++k) {
      const Complex ck = p.c[static_cast<std::size_t>(k)];
      log_value += subset.contains(k) ? log_gamma(ck - 1.0) : log_gamma(1.0 - ck);
    }
    log_value += log_gamma(c_all - p.a - m + 1.0) + log_gamma(1.0 - p.b);
    log_value -= log_gamma(c_in - p.a - r + 1.0);
    log_value -= log_gamma(c_in - p.b - r + 1.0);
    return std::exp(log_value);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::Pole) {
      throw;
    }
    throw Error(ErrorKind::DegenerateParameter,
                "Gamma prefactor for I=" + subset.label() + ": " + e.what());
  }
}

Complex pairing_g(const ParameterSet &p, const SubsetIndex &subset,
                  const EvaluationPoint &x, const SeriesOptions &options) {
  const Complex gamma_part = prefactor_F(p, subset);
  const auto local = eval_local_solution(p, subset, x, options);
  return gamma_part * local.value;
}

Complex pairing_g_dual(const ParameterSet &p, const SubsetIndex &subset,
                       const EvaluationPoint &x, const SeriesOptions &options) {
  return pairing_g(dual_parameters(p), subset, x, options);
}

} // namespace lauricella
