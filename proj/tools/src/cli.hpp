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

#ifndef LAURICELLA_TOOLS_CLI_HPP
#define LAURICELLA_TOOLS_CLI_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lauricella/core.hpp"
#include "lauricella/series.hpp"

namespace lauricella::cli {

using Json = nlohmann::ordered_json;

enum class Command { Eval, Basis, Ih, Ic, Pde, Euler, Tpr };

const char *to_string(Command command);

/// Bad configuration. Maps to exit status 2 and never produces a report.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct JobConfig {
  Command command = Command::Eval;
  int m = 0;
  std::optional<ParameterSet> parameters; ///< absent in sampling jobs
  std::optional<EvaluationPoint> x;
  std::optional<double> tolerance;        ///< command default when absent
  std::uint64_t seed = 0;
  int trials = 0;                         ///< > 0 selects seeded sampling
  double x_max = 0.01;                    ///< sampling range for x
  int degree = 15;                        ///< pde truncation degree
  SeriesOptions series;
  bool timing = true;                     ///< false pins runtime_ms to 0
};

/// Parses and validates a config document. Throws InputError.
JobConfig parse_config(const Json &document);

struct RunResult {
  Json report;
  int exit_code = 0; ///< 0 all verdicts pass, 1 some verdict failed
};

/// Runs one job. Throws InputError for configs that only fail at run time
/// (degenerate parameters, points outside the domain, ...).
RunResult run(const JobConfig &config);

/// Serializes with insertion-ordered keys and every double as %.17g.
std::string write_json(const Json &value);

} // namespace lauricella::cli

#endif // LAURICELLA_TOOLS_CLI_HPP
