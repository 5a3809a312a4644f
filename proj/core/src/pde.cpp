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

#include "lauricella/pde.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "lauricella/error.hpp"

namespace lauricella {

namespace {

int total_degree(const MultiIndex &n) {
  return std::accumulate(n.begin(), n.end(), 0);
}

} // namespace

TruncatedPolynomial::TruncatedPolynomial(int m, int degree)
    : m_(m), degree_(degree) {
  if (m < 1 || degree < 0) {
    throw Error(ErrorKind::InvalidArgument,
                "polynomial needs m >= 1 and degree >= 0");
  }
}

Complex TruncatedPolynomial::coefficient(const MultiIndex &n) const {
  const auto it = terms_.find(n);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void TruncatedPolynomial::add(const MultiIndex &n, Complex value) {
  if (static_cast<int>(n.size()) != m_ ||
      std::any_of(n.begin(), n.end(), [](int v) { return v < 0; })) {
    throw Error(ErrorKind::InvalidArgument, "invalid multi-index");
  }
  if (total_degree(n) > degree_) {
    return;
  }
  terms_[n] += value;
}

TruncatedPolynomial &
TruncatedPolynomial::operator+=(const TruncatedPolynomial &other) {
  if (other.m_ != m_) {
    throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  }
  degree_ = std::min(degree_, other.degree_);
  std::erase_if(terms_, [this](const auto &kv) {
    return total_degree(kv.first) > degree_;
  });
  for (const auto &[n, v] : other.terms_) {
    add(n, v);
  }
  return *this;
}

TruncatedPolynomial fc_truncation(const ParameterSet &p, int degree) {
  const int m = p.m();
  TruncatedPolynomial out(m, degree);
  const std::vector<Complex> unit(static_cast<std::size_t>(m), Complex{1.0, 0.0});

  // Graded generation: each index is reached from the parent obtained by
  // lowering its last nonzero entry.
  struct Node {
    MultiIndex n;
    int last;
    Complex coeff;
  };
  std::vector<Node> layer{{MultiIndex(static_cast<std::size_t>(m), 0), 0,
                           Complex{1.0, 0.0}}};
  out.add(layer.front().n, layer.front().coeff);
  for (int d = 1; d <= degree; ++d) {
    std::vector<Node> next;
    for (const auto &node : layer) {
      for (int k = node.last; k < m; ++k) {
        Node child{node.n, k, node.coeff * term_ratio(p, node.n, k, unit[0])};
        ++child.n[static_cast<std::size_t>(k)];
        out.add(child.n, child.coeff);
        next.push_back(std::move(child));
      }
    }
    layer = std::move(next);
  }
  return out;
}

TruncatedPolynomial apply_ec_operator(const ParameterSet &p, int k,
                                      const TruncatedPolynomial &f) {
  const int m = p.m();
  if (f.dimension() != m || k < 0 || k >= m) {
    throw Error(ErrorKind::InvalidArgument, "operator axis or dimension");
  }
  TruncatedPolynomial out(m, std::max(f.degree() - 1, 0));
  const Complex ck = p.c[static_cast<std::size_t>(k)];
  const Complex apb1 = p.a + p.b + 1.0;
  const Complex ab = p.a * p.b;

  for (const auto &[n, coeff] : f.terms()) {
    const auto nk = static_cast<double>(n[static_cast<std::size_t>(k)]);

    // Terms that lower the degree: x_k d_k^2 and c_k d_k.
    if (nk > 0.0) {
      MultiIndex lower = n;
      --lower[static_cast<std::size_t>(k)];
      out.add(lower, coeff * (nk * (nk - 1.0) + ck * nk));
    }

    // Degree-preserving terms, as a multiplier of x^n.
    Complex same = -nk * (nk - 1.0) - apb1 * nk - ab;
    for (int i = 0; i < m; ++i) {
      if (i == k) {
        continue;
      }
      const auto ni = static_cast<double>(n[static_cast<std::size_t>(i)]);
      same -= ni * nk;
      for (int j = 0; j < m; ++j) {
        const auto nj = static_cast<double>(n[static_cast<std::size_t>(j)]);
        same -= (i == j) ? ni * (ni - 1.0) : ni * nj;
      }
      same -= apb1 * ni;
    }
    out.add(n, coeff * same);
  }
  return out;
}

double pde_residual(const ParameterSet &p, int degree) {
  if (degree < 3) {
    throw Error(ErrorKind::InvalidArgument, "pde_residual needs N >= 3");
  }
  const auto f = fc_truncation(p, degree);
  const int checked = degree - 2;

  std::vector<double> scale(static_cast<std::size_t>(checked + 1), 0.0);
  for (const auto &[n, coeff] : f.terms()) {
    const int d = total_degree(n);
    if (d <= checked) {
      auto &s = scale[static_cast<std::size_t>(d)];
      s = std::max(s, std::abs(coeff));
    }
  }

  double worst = 0.0;
  for (int k = 0; k < p.m(); ++k) {
    const auto image = apply_ec_operator(p, k, f);
    for (const auto &[n, coeff] : image.terms()) {
      const int d = total_degree(n);
      if (d > checked) {
        continue;
      }
      const double s = std::max(scale[static_cast<std::size_t>(d)], 1e-300);
      worst = std::max(worst, std::abs(coeff) / s);
    }
  }
  return worst;
}

} // namespace lauricella
