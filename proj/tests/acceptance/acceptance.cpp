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

// Acceptance run: one PASS/FAIL line per criterion, detail lines indented.
//
//   acceptance [path/to/lauricella]
//
// The optional argument is the command-line tool, needed by criterion 9.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "lauricella/lauricella.hpp"
#include "oracles.hpp"

using namespace lauricella;
using oracle::rel_err;

namespace {

constexpr std::uint64_t kSeed = 20261014;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      details.push_back("failed: " + what);
    }
  }
  void note(const std::string &text) { details.push_back(text); }
};

std::string fmt(const char *format, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char *format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof buffer, format, args);
  va_end(args);
  return buffer;
}

int cycle_m(int trial) { return 1 + trial % 3; }

Outcome series_oracle() {
  Outcome out;
  Rng rng(kSeed + 1);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int m = cycle_m(t);
    const auto p = sample_generic_parameters(rng, m);
    const auto x = sample_point(rng, m, 0.05);
    const auto v = eval_fc(p, x);
    const double err = rel_err(v.value, direct_sum_oracle(p, x, 60));
    worst = std::max(worst, err);
    out.require(v.converged && err <= 1e-12, fmt("trial %d m=%d rel err %.3g", t, m, err));
  }
  out.note(fmt("100 instances, worst relative difference %.3g", worst));
  return out;
}

Outcome pde_annihilation() {
  Outcome out;
  Rng rng(kSeed + 2);
  double worst = 0.0;
  int sets = 0;
  for (int t = 0; t < 15; ++t) {
    const int m = cycle_m(t);
    const auto p = sample_generic_parameters(rng, m);
    for (const auto &spec : enumerate_basis(p)) {
      const double r = pde_residual(spec.transformed(), 15);
      worst = std::max(worst, r);
      ++sets;
      out.require(r <= 1e-12, fmt("trial %d I=%s residual %.3g", t,
                                  spec.subset.label().c_str(), r));
    }
  }
  out.note(fmt("%d parameter sets (base and transformed), N=15, worst %.3g", sets, worst));
  return out;
}

Outcome homology_matrix() {
  Outcome out;
  Rng rng(kSeed + 3);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int m = cycle_m(t);
    const auto p = sample_generic_parameters(rng, m);
    const auto h = ih_matrix(p);
    const std::size_t n = h.size();
    out.require(n == (std::size_t{1} << m) && enumerate_basis(p).size() == n,
                fmt("trial %d: basis count", t));
    std::vector<Complex> dense(n * n);
    bool diagonal = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        dense[i * n + j] = h.at(i, j);
        diagonal = diagonal && (i == j || h.at(i, j) == Complex(0.0, 0.0));
      }
    }
    out.require(diagonal, fmt("trial %d: off-diagonal entry", t));
    const Complex det = h.determinant();
    out.require(std::abs(det) > 0.0 && std::isfinite(std::abs(det)) &&
                    rel_err(det, oracle::determinant(dense, n)) <= 1e-12,
                fmt("trial %d: determinant", t));
    std::vector<std::pair<Complex, Complex>> pairs;
    if (m == 1) {
      pairs = {{h.diagonal()[0], oracle::ih_m1_empty(p)},
               {h.diagonal()[1], oracle::ih_m1_full(p)}};
    } else if (m == 2) {
      pairs = {{h.diagonal()[0], oracle::ih_m2_empty(p)},
               {h.diagonal()[1], oracle::ih_m2_first(p)}};
    }
    for (const auto &[got, want] : pairs) {
      const double err = rel_err(got, want);
      worst = std::max(worst, err);
      out.require(err <= 1e-12, fmt("trial %d m=%d closed form %.3g", t, m, err));
    }
  }
  out.note(fmt("50 parameter sets, worst closed-form difference %.3g", worst));
  return out;
}

Outcome cohomology_flags() {
  Outcome out;
  for (int m = 1; m <= 6; ++m) {
    const auto n = enumerate_flags(m).size();
    out.require(n == oracle::count_flags_recursive(m), fmt("m=%d flag count %zu", m, n));
  }
  Rng rng(kSeed + 4);
  double worst = 0.0;
  for (int t = 0; t < 40; ++t) {
    const int m = 1 + t % 4;
    const auto p = sample_generic_parameters(rng, m);
    const double err = rel_err(ic_phi_phi(p), oracle::brute_force_ic(p));
    worst = std::max(worst, err);
    out.require(err <= 1e-13, fmt("trial %d m=%d chain sum %.3g", t, m, err));
  }
  out.require(ic_phi_phiprime() == Complex(0.0, 0.0), "ic_phi_phiprime is not 0");
  out.note(fmt("flag counts m=1..6 match; 40 chain sums, worst %.3g", worst));
  return out;
}

struct RelationSample {
  int m;
  ParameterSet p;
  EvaluationPoint x;
  RelationReport tpr1, tpr2, raw;
};

std::vector<RelationSample> relation_samples() {
  std::vector<RelationSample> samples;
  Rng rng(kSeed + 5);
  const RelationOptions reduced{{}, 1e-8};
  const RelationOptions raw{{}, 1e-7};
  for (int t = 0; t < 50; ++t) {
    RelationSample s;
    s.m = cycle_m(t);
    s.p = sample_generic_parameters(rng, s.m);
    s.x = sample_point(rng, s.m, 0.01);
    s.tpr1 = tpr1_reduced(s.p, s.x, reduced);
    s.tpr2 = tpr2_reduced(s.p, s.x, reduced);
    s.raw = tpr1_raw(s.p, s.x, raw);
    samples.push_back(std::move(s));
  }
  return samples;
}

Outcome period_relations(const std::vector<RelationSample> &samples) {
  Outcome out;
  std::array<int, 4> total{}, tpr1_ok{}, tpr2_ok{};
  std::array<double, 4> tpr1_worst{}, tpr2_worst{};
  for (std::size_t t = 0; t < samples.size(); ++t) {
    const auto &s = samples[t];
    ++total[s.m];
    tpr1_worst[s.m] = std::max(tpr1_worst[s.m], s.tpr1.residual);
    tpr2_worst[s.m] = std::max(tpr2_worst[s.m], s.tpr2.residual);
    tpr1_ok[s.m] += s.tpr1.residual <= 1e-8;
    tpr2_ok[s.m] += s.tpr2.residual <= 1e-8;
    if (s.tpr1.residual > 1e-8 || s.tpr2.residual > 1e-8) {
      out.pass = false;
    }
  }
  for (int m = 1; m <= 3; ++m) {
    out.note(fmt("m=%d: tpr1_reduced %d/%d (worst %.3g), tpr2_reduced %d/%d (worst %.3g)",
                 m, tpr1_ok[m], total[m], tpr1_worst[m], tpr2_ok[m], total[m],
                 tpr2_worst[m]));
  }
  if (tpr2_ok[1] < total[1]) {
    out.note("tpr2_reduced with one variable: the alternating sum equals (c-1)/(1-x), not 0");
  }
  double origin_worst = 0.0;
  for (const auto &s : samples) {
    if (s.m == 1) {
      const auto r = tpr1_reduced(s.p, {{0.0}}, {{}, 1e-14});
      origin_worst = std::max(origin_worst, r.residual);
      if (!r.pass) {
        out.pass = false;
      }
    }
  }
  const auto r = tpr1_reduced(ParameterSet::make(1, 0.3, 0.45, {0.7}), {{0.0}}, {{}, 1e-14});
  origin_worst = std::max(origin_worst, r.residual);
  out.require(origin_worst <= 1e-14, fmt("tpr1_reduced at x=0 residual %.3g", origin_worst));
  out.note(fmt("tpr1_reduced at x=0, m=1: worst residual %.3g", origin_worst));
  return out;
}

Outcome raw_consistency(const std::vector<RelationSample> &samples) {
  Outcome out;
  double worst = 0.0;
  int checked = 0;
  for (std::size_t t = 0; t < samples.size(); ++t) {
    const auto &s = samples[t];
    if (s.m <= 2) {
      ++checked;
      worst = std::max(worst, s.raw.residual);
      out.require(s.raw.residual <= 1e-7, fmt("trial %zu m=%d raw residual %.3g", t, s.m,
                                              s.raw.residual));
    }
    out.require(s.raw.pass == s.tpr1.pass,
                fmt("trial %zu m=%d verdicts differ (raw %.3g, reduced %.3g)", t, s.m,
                    s.raw.residual, s.tpr1.residual));
  }
  out.note(fmt("%d instances with m<=2, worst raw residual %.3g; verdicts compared on all %zu",
               checked, worst, samples.size()));
  return out;
}

Outcome euler_integral() {
  Outcome out;
  Rng rng(kSeed + 7);
  const double xs[] = {0.01, 0.05, 0.1};
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto p = sample_euler_parameters(rng);
    const auto r = verify_integral_identity(p, xs[t % 3], 1e-7);
    worst = std::max(worst, r.residual);
    out.require(r.pass, fmt("trial %d residual %.3g", t, r.residual));
  }
  out.note(fmt("20 triples, worst relative difference %.3g", worst));
  return out;
}

Outcome gamma_reflection() {
  Outcome out;
  Rng rng(kSeed + 8);
  double worst = 0.0;
  int n = 0;
  while (n < 100) {
    const Complex z{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    if (std::abs(z - std::round(z.real())) < 0.05) {
      continue;
    }
    ++n;
    const Complex want = oracle::kPi / std::sin(oracle::kPi * z);
    const double err = rel_err(gamma_function(z) * gamma_function(1.0 - z), want);
    worst = std::max(worst, err);
    out.require(err <= 1e-12, fmt("z=%g%+gi residual %.3g", z.real(), z.imag(), err));
  }
  out.note(fmt("100 points, worst %.3g", worst));
  return out;
}

bool run_tool(const std::string &command, std::string &output, int &status) {
  FILE *pipe = popen(command.c_str(), "r");
  if (!pipe) {
    return false;
  }
  output.clear();
  char buffer[4096];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    output.append(buffer, got);
  }
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return true;
}

Outcome cli_determinism(const char *tool) {
  Outcome out;
  if (!tool) {
    out.require(false, "no path to the command-line tool was given");
    return out;
  }
  const std::string config = "acceptance_cli_job.json";
  {
    std::ofstream file(config);
    file << R"({"command": "tpr", "m": 2, "trials": 5, "seed": 77, "x_max": 0.01})";
  }
  const std::string command = std::string(tool) + " --no-timing --config " + config;
  std::string first, second;
  int s1 = -1, s2 = -1;
  out.require(run_tool(command, first, s1) && run_tool(command, second, s2),
              "could not start the tool");
  out.require(!first.empty() && first == second, "reports differ between runs");
  out.require(s1 == s2, "exit status differs between runs");
  std::string other;
  int s3 = -1;
  run_tool(std::string(tool) + " --no-timing --seed 78 --config " + config, other, s3);
  out.require(other != first, "a different seed gave the same report");
  std::remove(config.c_str());
  out.note(fmt("two runs, %zu bytes each, exit status %d", first.size(), s1));
  return out;
}

} // namespace

int main(int argc, char **argv) {
  const char *tool = argc > 1 ? argv[1] : nullptr;
  std::vector<RelationSample> samples;

  struct Criterion {
    int id;
    const char *name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "series oracle equivalence", 5.0, series_oracle},
      {2, "PDE annihilation", 10.0, pde_annihilation},
      {3, "homology intersection matrix", 0.0, homology_matrix},
      {4, "cohomology flag sum", 0.0, cohomology_flags},
      {5, "twisted period relations", 30.0,
       [&] {
         samples = relation_samples();
         return period_relations(samples);
       }},
      {6, "raw vs reduced consistency", 0.0, [&] { return raw_consistency(samples); }},
      {7, "Euler integral", 10.0, euler_integral},
      {8, "gamma reflection", 0.0, gamma_reflection},
      {9, "CLI determinism", 0.0, [&] { return cli_determinism(tool); }},
  };

  int failed = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception &e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0.0 && seconds > c.budget_s) {
      outcome.require(false, fmt("runtime %.2f s over the %.0f s budget", seconds, c.budget_s));
    }
    failed += !outcome.pass;
    std::printf("criterion %d: %s  %s  (%.2f s)\n", c.id, outcome.pass ? "PASS" : "FAIL",
                c.name, seconds);
    std::size_t shown = 0;
    for (const auto &d : outcome.details) {
      if (++shown > 12) {
        std::printf("    ... %zu more\n", outcome.details.size() - 12);
        break;
      }
      std::printf("    %s\n", d.c_str());
    }
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
