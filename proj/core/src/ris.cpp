// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The riscust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "riscust/ris.hpp"

#include "riscust/channel.hpp"
#include "riscust/errors.hpp"

#include <cmath>
#include <numbers>

namespace riscust {

Eigen::VectorXcd RisConfiguration::gamma_diagonal() const {
  Eigen::VectorXcd g(phases.size());
  for (Eigen::Index n = 0; n < phases.size(); ++n) g(n) = std::polar(1.0, phases(n) + common_phase);
  return g;
}

RisConfiguration inactive_configuration(int ris_index, int n_elements) {
  RisConfiguration cfg;
  cfg.ris_index = ris_index;
  cfg.phases = Eigen::VectorXd::Zero(n_elements);
  cfg.linear_slope = 0.0;
  return cfg;
}

RisConfiguration custom_configuration(int ris_index, Eigen::VectorXd phases) {
  RisConfiguration cfg;
  cfg.ris_index = ris_index;
  cfg.phases = std::move(phases);
  return cfg;
}

RisConfiguration align_phases(double phi_d, double theta_a, int n_elements) {
  if (n_elements < 1) fail(ErrorKind::InvalidArgument, "align_phases: n_elements must be >= 1");
  RisConfiguration cfg;
  const double slope = phi_d - theta_a;
  cfg.phases.resize(n_elements);
  for (int n = 0; n < n_elements; ++n) cfg.phases(n) = n * slope;
  cfg.linear_slope = slope;
  return cfg;
}

std::complex<double> dirichlet_sum(int n, double delta) {
  const double r = std::remainder(delta, 2.0 * std::numbers::pi);
  if (std::abs(r) < 1e-12) return {1.0, 0.0};
  const double magnitude = std::sin(0.5 * n * r) / (n * std::sin(0.5 * r));
  return std::polar(1.0, 0.5 * (n - 1) * r) * magnitude;
}

std::complex<double> ris_inner_product(const RisConfiguration &ris, double y_out, double y_in) {
  const int n = ris.n_elements();
  if (ris.linear_slope) {
    return std::polar(1.0, ris.common_phase) * dirichlet_sum(n, y_in - y_out + *ris.linear_slope);
  }
  std::complex<double> acc{0.0, 0.0};
  for (int i = 0; i < n; ++i) acc += std::polar(1.0, ris.phases(i) + i * (y_in - y_out));
  return std::polar(1.0, ris.common_phase) * acc / static_cast<double>(n);
}

std::complex<double> effective_gain(const CascadedDecomposition &decomp, int k, int l, int j) {
  return decomp.gain(k, l, j);
}

double common_phase_refinement(std::complex<double> alpha_r, std::complex<double> alpha_t,
                               double phi_a, int n_rx) {
  if (alpha_r == 0.0 || alpha_t == 0.0) {
    fail(ErrorKind::UndefinedPhase, "common phase undefined for a zero path gain");
  }
  return -(std::arg(alpha_r) + std::arg(alpha_t) + 0.5 * (n_rx - 1) * phi_a);
}

double leakage_norm(const CascadedDecomposition &decomp, const std::vector<PathIndex> &active) {
  Eigen::MatrixXcd inactive = decomp.xi;
  for (const auto &p : active) {
    decomp.gain(p.k, p.l, p.j); // range check
    inactive(decomp.row_of(p.k, p.l), decomp.col_of(p.k, p.j)) = 0.0;
  }
  return (decomp.r_matrix * inactive * decomp.t_matrix.adjoint()).norm();
}

} // namespace riscust
