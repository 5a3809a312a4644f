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

// lauricella: evaluate F_C, its local basis and intersection numbers, and
// check the quadratic relations. Reads a JSON job, writes a JSON report.
//
//   lauricella --config job.json --out report.json
//   echo '{"command":"eval","parameters":{"a":0.3,"b":0.45,"c":[0.7]},"x":[0.05]}' | lauricella
//
// Exit status: 0 every verdict passed, 1 some verdict failed, 2 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

constexpr int kInputError = 2;

std::string read_all(std::istream &in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

int main(int argc, char **argv) {
  namespace lc = lauricella::cli;

  CLI::App app{"Lauricella F_C evaluation and verification reports"};
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<double> tol;
  bool no_timing = false;
  app.add_option("--config", config_path, "job file (default: stdin)");
  app.add_option("--out", out_path, "report file (default: stdout)");
  app.add_option("--seed", seed, "override the sampling seed");
  app.add_option("--trials", trials, "override the number of sampled trials")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tol", tol, "override the verification tolerance")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", no_timing, "report runtime_ms as 0");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  std::string text;
  if (config_path.empty()) {
    text = read_all(std::cin);
  } else {
    std::ifstream file(config_path, std::ios::binary);
    if (!file) {
      std::cerr << "lauricella: cannot open " << config_path << "\n";
      return kInputError;
    }
    text = read_all(file);
  }

  lc::RunResult result;
  try {
    auto document = lc::Json::parse(text);
    if (document.is_object()) {
      if (seed) document["seed"] = *seed;
      if (trials) document["trials"] = *trials;
      if (tol) document["tolerance"] = *tol;
    }
    auto config = lc::parse_config(document);
    config.timing = !no_timing;
    result = lc::run(config);
  } catch (const lc::Json::exception &e) {
    std::cerr << "lauricella: invalid JSON: " << e.what() << "\n";
    return kInputError;
  } catch (const lc::InputError &e) {
    std::cerr << "lauricella: " << e.what() << "\n";
    return kInputError;
  }

  const std::string report = lc::write_json(result.report);
  if (out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << report)) {
      std::cerr << "lauricella: cannot write " << out_path << "\n";
      return kInputError;
    }
  }
  return result.exit_code;
}
