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

#ifndef LAURICELLA_ERROR_HPP
#define LAURICELLA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lauricella {

enum class ErrorKind {
  MalformedParameter,
  DegenerateParameter,
  Domain,
  Pole,
  PrefactorSingularity,
  ConvergenceCondition,
  InvalidArgument,
};

const char *to_string(ErrorKind kind) noexcept;

// Every library failure is reported through this type; `kind()` lets callers
// (the CLI in particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace lauricella

#endif // LAURICELLA_ERROR_HPP
