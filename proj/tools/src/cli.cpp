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

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string_view>
#include <utility>
#include <vector>

#include "lauricella/lauricella.hpp"

namespace lauricella::cli {

const char *to_string(Command command) {
  switch (command) {
  case Command::Eval: return "eval";
  case Command::Basis: return "basis";
  case Command::Ih: return "ih";
  case Command::Ic: return "ic";
  case Command::Pde: return "pde";
  case Command::Euler: return "euler";
  case Command::Tpr: return "tpr";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------- parsing

Command parse_command(const Json &value) {
  if (!value.is_string()) {
    throw InputError("\"command\" must be a string");
  }
  const auto name = value.get<std::string>();
  for (auto command : {Command::Eval, Command::Basis, Command::Ih, Command::Ic,
                       Command::Pde, Command::Euler, Command::Tpr}) {
    if (name == to_string(command)) {
      return command;
    }
  }
  throw InputError("unknown command \"" + name + "\"");
}

Complex parse_complex(const Json &value, const std::string &what) {
  if (value.is_number()) {
    return {value.get<double>(), 0.0};
  }
  if (value.is_array() && value.size() == 2 && value[0].is_number() &&
      value[1].is_number()) {
    return {value[0].get<double>(), value[1].get<double>()};
  }
  throw InputError(what + " must be a number or a [re, im] pair");
}

std::vector<Complex> parse_vector(const Json &value, const std::string &what) {
  if (!value.is_array() || value.empty()) {
    throw InputError(what + " must be a non-empty array");
  }
  std::vector<Complex> out;
  for (std::size_t k = 0; k < value.size(); ++k) {
    out.push_back(parse_complex(value[k], what + "[" + std::to_string(k) + "]"));
  }
  return out;
}

double parse_positive(const Json &value, const std::string &what) {
  if (!value.is_number() || !(value.get<double>() > 0.0) ||
      !std::isfinite(value.get<double>())) {
    throw InputError(what + " must be a positive number");
  }
  return value.get<double>();
}

int parse_int(const Json &value, const std::string &what, int lo, int hi) {
  if (!value.is_number_integer() || value.get<long long>() < lo ||
      value.get<long long>() > hi) {
    throw InputError(what + " must be an integer in [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "]");
  }
  return value.get<int>();
}

void reject_unknown_keys(const Json &object, std::initializer_list<std::string_view> keys,
                         const std::string &where) {
  for (const auto &item : object.items()) {
    bool known = false;
    for (auto key : keys) {
      known = known || item.key() == key;
    }
    if (!known) {
      throw InputError("unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

// ---------------------------------------------------------------- output

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json vector_json(const std::vector<Complex> &v) {
  Json out = Json::array();
  for (const auto &z : v) {
    out.push_back(complex_json(z));
  }
  return out;
}

Json parameters_json(const ParameterSet &p) {
  Json out = Json::object();
  out["a"] = complex_json(p.a);
  out["b"] = complex_json(p.b);
  out["c"] = vector_json(p.c);
  return out;
}

Json relation_json(const RelationReport &report) {
  Json out = Json::object();
  out["identity"] = report.identity_name;
  out["lhs"] = complex_json(report.lhs);
  out["rhs"] = complex_json(report.rhs);
  out["residual"] = report.residual;
  out["tolerance"] = report.tolerance;
  out["pass"] = report.pass;
  Json terms = Json::array();
  for (const auto &term : report.terms) {
    Json row = Json::object();
    row["subset"] = term.subset.label();
    row["value"] = complex_json(term.value);
    terms.push_back(std::move(row));
  }
  out["terms"] = std::move(terms);
  return out;
}

std::string c_sum_text(const SubsetIndex &subset) {
  std::string out;
  for (int k : subset.members()) {
    out += (out.empty() ? "c" : "+c") + std::to_string(k + 1);
  }
  return out;
}

std::string offset_text(int n) {
  if (n == 0) {
    return "";
  }
  return (n > 0 ? "+" : "-") + std::to_string(std::abs(n));
}

// Symbolic form of I_c(phi, phi) in the variables a, b, c1..cm.
std::string ic_closed_form(int m, const std::vector<Flag> &flags) {
  const SubsetIndex full = SubsetIndex::full(m);
  std::string out = "(2*pi*i)^" + std::to_string(m) + " * (1/(" +
                    c_sum_text(full) + "-a" + offset_text(1 - m) + ") + 1/(b" +
                    offset_text(m);
  for (int k = 0; k < m; ++k) {
    out += "-c" + std::to_string(k + 1);
  }
  out += ")) * (";
  for (std::size_t f = 0; f < flags.size(); ++f) {
    if (f > 0) {
      out += " + ";
    }
    const auto &chain = flags[f].chain;
    if (chain.empty()) {
      out += "1";
    }
    for (std::size_t r = 0; r < chain.size(); ++r) {
      if (r > 0) {
        out += "*";
      }
      std::string denom = "b" + offset_text(chain[r].size());
      for (int k : chain[r].members()) {
        denom += "-c" + std::to_string(k + 1);
      }
      out += "1/(" + denom + ")";
    }
  }
  return out + ")";
}

// ---------------------------------------------------------------- commands

struct Instance {
  ParameterSet p;
  std::optional<EvaluationPoint> x;
};

Json run_eval(const Instance &in, const JobConfig &config, bool &pass) {
  const auto v = eval_fc(in.p, *in.x, config.series);
  Json out = Json::object();
  out["value"] = complex_json(v.value);
  out["order"] = v.order;
  out["tail_estimate"] = v.tail_estimate;
  out["converged"] = v.converged;
  pass = v.converged;
  return out;
}

Json run_basis(const Instance &in, const JobConfig &config, bool &pass) {
  const auto basis = enumerate_basis(in.p);
  Json rows = Json::array();
  pass = basis.size() == (std::size_t{1} << in.p.m());
  for (const auto &spec : basis) {
    Json row = Json::object();
    row["subset"] = spec.subset.label();
    row["a_I"] = complex_json(spec.a_I);
    row["b_I"] = complex_json(spec.b_I);
    row["c_I"] = vector_json(spec.c_I);
    row["exponents"] = vector_json(spec.prefactor_exponents);
    if (in.x) {
      const auto v = eval_local_solution(in.p, spec.subset, *in.x, config.series);
      row["value"] = complex_json(v.value);
      row["converged"] = v.converged;
      pass = pass && v.converged;
    }
    rows.push_back(std::move(row));
  }
  Json out = Json::object();
  out["count"] = basis.size();
  out["solutions"] = std::move(rows);
  return out;
}

Json run_ih(const Instance &in, const JobConfig &, bool &pass) {
  const auto matrix = ih_matrix(in.p);
  Json rows = Json::array();
  const auto subsets = all_subsets(in.p.m());
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    Json row = Json::object();
    row["subset"] = subsets[k].label();
    row["value"] = complex_json(matrix.diagonal()[k]);
    rows.push_back(std::move(row));
  }
  const Complex det = matrix.determinant();
  Json out = Json::object();
  out["diagonal"] = std::move(rows);
  out["determinant"] = complex_json(det);
  pass = std::isfinite(std::abs(det)) && std::abs(det) > 0.0;
  return out;
}

Json run_ic(const Instance &in, const JobConfig &, bool &pass) {
  const int m = in.p.m();
  const auto flags = enumerate_flags(m);
  Json rows = Json::array();
  for (const auto &flag : flags) {
    Json chain = Json::array();
    for (const auto &s : flag.chain) {
      chain.push_back(s.label());
    }
    Json row = Json::object();
    row["chain"] = std::move(chain);
    row["term"] = complex_json(flag_term(in.p, flag));
    rows.push_back(std::move(row));
  }
  std::size_t factorial = 1;
  for (int k = 2; k <= m; ++k) {
    factorial *= static_cast<std::size_t>(k);
  }
  const Complex value = ic_phi_phi(in.p);
  Json out = Json::object();
  out["value"] = complex_json(value);
  out["closed_form"] = ic_closed_form(m, flags);
  out["flag_count"] = flags.size();
  out["flags"] = std::move(rows);
  out["flag_sum"] = complex_json(flag_sum(in.p));
  out["ic_phi_phiprime"] = complex_json(ic_phi_phiprime());
  pass = flags.size() == factorial && std::isfinite(std::abs(value));
  return out;
}

Json run_pde(const Instance &in, const JobConfig &config, bool &pass) {
  const double tol = config.tolerance.value_or(1e-12);
  Json rows = Json::array();
  pass = true;
  for (const auto &spec : enumerate_basis(in.p)) {
    const double residual = pde_residual(spec.transformed(), config.degree);
    Json row = Json::object();
    row["subset"] = spec.subset.label();
    row["residual"] = residual;
    row["pass"] = residual <= tol;
    pass = pass && residual <= tol;
    rows.push_back(std::move(row));
  }
  Json out = Json::object();
  out["degree"] = config.degree;
  out["tolerance"] = tol;
  out["residuals"] = std::move(rows);
  return out;
}

Json run_euler(const Instance &in, const JobConfig &config, bool &pass) {
  if (in.p.m() != 1) {
    throw InputError("euler needs m = 1");
  }
  const Complex x = in.x->x[0];
  if (x.imag() != 0.0 || !(x.real() > 0.0 && x.real() < 1.0)) {
    throw InputError("euler needs a real x in (0, 1)");
  }
  const auto report =
      verify_integral_identity(in.p, x.real(), config.tolerance.value_or(1e-7));
  pass = report.pass;
  return relation_json(report);
}

bool positive_real(const EvaluationPoint &x) {
  for (const auto &xk : x.x) {
    if (xk.imag() != 0.0 || !(xk.real() > 0.0)) {
      return false;
    }
  }
  return true;
}

Json run_tpr(const Instance &in, const JobConfig &config, bool &pass) {
  RelationOptions reduced{config.series, config.tolerance.value_or(1e-8)};
  RelationOptions raw{config.series, config.tolerance.value_or(1e-7)};
  Json identities = Json::array();
  pass = true;
  for (const auto &report : {tpr1_reduced(in.p, *in.x, reduced),
                             tpr2_reduced(in.p, *in.x, reduced)}) {
    pass = pass && report.pass;
    identities.push_back(relation_json(report));
  }
  if (positive_real(*in.x)) {
    const auto report = tpr1_raw(in.p, *in.x, raw);
    pass = pass && report.pass;
    identities.push_back(relation_json(report));
  } else {
    Json skipped = Json::object();
    skipped["identity"] = "tpr1_raw";
    skipped["skipped"] = "needs positive real x";
    identities.push_back(std::move(skipped));
  }
  Json out = Json::object();
  out["identities"] = std::move(identities);
  return out;
}

Json dispatch(const Instance &in, const JobConfig &config, bool &pass) {
  switch (config.command) {
  case Command::Eval: return run_eval(in, config, pass);
  case Command::Basis: return run_basis(in, config, pass);
  case Command::Ih: return run_ih(in, config, pass);
  case Command::Ic: return run_ic(in, config, pass);
  case Command::Pde: return run_pde(in, config, pass);
  case Command::Euler: return run_euler(in, config, pass);
  case Command::Tpr: return run_tpr(in, config, pass);
  }
  throw InputError("unhandled command");
}

bool needs_point(Command command) {
  return command == Command::Eval || command == Command::Euler ||
         command == Command::Tpr;
}

// ---------------------------------------------------------------- writer

void write_value(const Json &value, std::string &out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (value.type()) {
  case Json::value_t::object: {
    if (value.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto &item : value.items()) {
      if (!first) {
        out += ",\n";
      }
      first = false;
      out += pad + Json(item.key()).dump() + ": ";
      write_value(item.value(), out, indent + 2);
    }
    out += "\n" + close + "}";
    return;
  }
  case Json::value_t::array: {
    // Leaf arrays ([re, im] pairs, short label lists) stay on one line.
    bool flat = true;
    for (const auto &element : value) {
      flat = flat && !element.is_structured();
    }
    if (value.empty() || flat) {
      out += "[";
      for (std::size_t k = 0; k < value.size(); ++k) {
        if (k > 0) {
          out += ", ";
        }
        write_value(value[k], out, indent);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (k > 0) {
        out += ",\n";
      }
      out += pad;
      write_value(value[k], out, indent + 2);
    }
    out += "\n" + close + "]";
    return;
  }
  case Json::value_t::number_float: {
    const double d = value.get<double>();
    if (!std::isfinite(d)) {
      out += "null";
      return;
    }
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", d);
    out += buffer;
    return;
  }
  default:
    out += value.dump();
    return;
  }
}

} // namespace

JobConfig parse_config(const Json &document) {
  if (!document.is_object()) {
    throw InputError("config must be a JSON object");
  }
  reject_unknown_keys(document,
                      {"command", "m", "parameters", "x", "tolerance", "seed",
                       "trials", "x_max", "degree", "series"},
                      "config");
  if (!document.contains("command")) {
    throw InputError("missing \"command\"");
  }
  JobConfig config;
  config.command = parse_command(document["command"]);

  if (document.contains("m")) {
    config.m = parse_int(document["m"], "\"m\"", 1, 10);
  }
  if (document.contains("parameters")) {
    const auto &params = document["parameters"];
    if (!params.is_object()) {
      throw InputError("\"parameters\" must be an object");
    }
    reject_unknown_keys(params, {"a", "b", "c"}, "parameters");
    for (const char *key : {"a", "b", "c"}) {
      if (!params.contains(key)) {
        throw InputError(std::string("parameters.") + key + " is required");
      }
    }
    ParameterSet p{parse_complex(params["a"], "parameters.a"),
                   parse_complex(params["b"], "parameters.b"),
                   parse_vector(params["c"], "parameters.c")};
    if (p.m() > 10) {
      throw InputError("at most 10 variables are supported");
    }
    if (config.m != 0 && config.m != p.m()) {
      throw InputError("\"m\" disagrees with the length of parameters.c");
    }
    config.m = p.m();
    config.parameters = std::move(p);
  }
  if (document.contains("x")) {
    EvaluationPoint x{parse_vector(document["x"], "\"x\"")};
    if (config.m != 0 && x.m() != config.m) {
      throw InputError("\"x\" has " + std::to_string(x.m()) +
                       " coordinates, expected " + std::to_string(config.m));
    }
    config.m = x.m();
    config.x = std::move(x);
  }
  if (document.contains("tolerance")) {
    config.tolerance = parse_positive(document["tolerance"], "\"tolerance\"");
  }
  if (document.contains("seed")) {
    if (!document["seed"].is_number_unsigned()) {
      throw InputError("\"seed\" must be a non-negative integer");
    }
    config.seed = document["seed"].get<std::uint64_t>();
  }
  if (document.contains("trials")) {
    config.trials = parse_int(document["trials"], "\"trials\"", 0, 100000);
  }
  if (document.contains("x_max")) {
    config.x_max = parse_positive(document["x_max"], "\"x_max\"");
    if (config.x_max >= 1.0) {
      throw InputError("\"x_max\" must be below 1");
    }
  }
  if (document.contains("degree")) {
    config.degree = parse_int(document["degree"], "\"degree\"", 3, 40);
  }
  if (document.contains("series")) {
    const auto &series = document["series"];
    if (!series.is_object()) {
      throw InputError("\"series\" must be an object");
    }
    reject_unknown_keys(series, {"rel_tol", "max_degree"}, "series");
    if (series.contains("rel_tol")) {
      config.series.rel_tol = parse_positive(series["rel_tol"], "series.rel_tol");
    }
    if (series.contains("max_degree")) {
      config.series.cap =
          parse_int(series["max_degree"], "series.max_degree", 1, 100000);
    }
  }

  if (config.trials > 0) {
    if (config.parameters || config.x) {
      throw InputError("sampling jobs (trials > 0) take no parameters or x");
    }
    if (config.command == Command::Euler) {
      if (config.m == 0) {
        config.m = 1;
      }
      if (config.m != 1) {
        throw InputError("euler needs m = 1");
      }
    }
    if (config.m == 0) {
      throw InputError("sampling jobs need \"m\"");
    }
  } else {
    if (!config.parameters) {
      throw InputError("missing \"parameters\"");
    }
    if (needs_point(config.command) && !config.x) {
      throw InputError(std::string("command ") + to_string(config.command) +
                       " needs \"x\"");
    }
  }
  return config;
}

RunResult run(const JobConfig &config) {
  const auto start = std::chrono::steady_clock::now();

  Json inputs = Json::object();
  inputs["m"] = config.m;
  if (config.parameters) {
    inputs["parameters"] = parameters_json(*config.parameters);
  }
  if (config.x) {
    inputs["x"] = vector_json(config.x->x);
  }
  if (config.tolerance) {
    inputs["tolerance"] = *config.tolerance;
  }
  if (config.command == Command::Pde) {
    inputs["degree"] = config.degree;
  }
  inputs["series"] = Json::object({{"rel_tol", config.series.rel_tol},
                                   {"max_degree", config.series.cap}});
  inputs["seed"] = config.seed;
  inputs["trials"] = config.trials;
  if (config.trials > 0) {
    inputs["x_max"] = config.x_max;
  }

  bool all_pass = true;
  Json results;
  if (config.trials == 0) {
    Instance in{*config.parameters, config.x};
    try {
      results = dispatch(in, config, all_pass);
    } catch (const Error &e) {
      throw InputError(std::string(to_string(e.kind())) + ": " + e.what());
    }
  } else {
    results = Json::array();
    Rng rng(config.seed);
    for (int t = 0; t < config.trials; ++t) {
      Instance in;
      in.p = config.command == Command::Euler
                 ? sample_euler_parameters(rng)
                 : sample_generic_parameters(rng, config.m);
      if (needs_point(config.command) || config.command == Command::Basis) {
        in.x = sample_point(rng, config.m, config.x_max);
      }
      Json row = Json::object();
      row["trial"] = t;
      row["parameters"] = parameters_json(in.p);
      if (in.x) {
        row["x"] = vector_json(in.x->x);
      }
      bool pass = false;
      try {
        row["result"] = dispatch(in, config, pass);
      } catch (const Error &e) {
        row["error"] = std::string(to_string(e.kind())) + ": " + e.what();
        pass = false;
      }
      row["pass"] = pass;
      all_pass = all_pass && pass;
      results.push_back(std::move(row));
    }
  }

  double runtime_ms = 0.0;
  if (config.timing) {
    runtime_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  }
  RunResult out;
  out.report = Json::object();
  out.report["command"] = to_string(config.command);
  out.report["inputs"] = std::move(inputs);
  out.report["results"] = std::move(results);
  out.report["verdict"] = all_pass ? "pass" : "fail";
  out.report["runtime_ms"] = runtime_ms;
  out.exit_code = all_pass ? 0 : 1;
  return out;
}

std::string write_json(const Json &value) {
  std::string out;
  write_value(value, out, 0);
  out += "\n";
  return out;
}

} // namespace lauricella::cli
