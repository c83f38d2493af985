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

#ifndef RISCUST_RIS_HPP
#define RISCUST_RIS_HPP

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

namespace riscust {

struct CascadedDecomposition;

/// A cascaded path (k, l, j): RIS k, RIS-Rx path l, Tx-RIS path j (0 = LoS).
/// All indices are 0-based.
struct PathIndex {
  int k = 0;
  int l = 0;
  int j = 0;

  bool operator==(const PathIndex &) const = default;
};

struct AlignedPath {
  int l = 0;
  int j = 0;

  bool operator==(const AlignedPath &) const = default;
};

/// Phase-shifter state of one RIS. The alignment phases and the common phase
/// are kept apart; the element response is exp(j (phases[n] + common_phase)).
struct RisConfiguration {
  int ris_index = 0;
  Eigen::VectorXd phases;
  std::optional<AlignedPath> aligned_path;
  double common_phase = 0.0;
  /// Set when phases[n] = n * slope exactly; enables the closed-form inner product.
  std::optional<double> linear_slope;

  int n_elements() const { return static_cast<int>(phases.size()); }
  Eigen::VectorXcd gamma_diagonal() const;
};

/// Identity response (all-zero phases) for an inactive RIS.
RisConfiguration inactive_configuration(int ris_index, int n_elements);

/// Arbitrary phase vector (no alignment record).
RisConfiguration custom_configuration(int ris_index, Eigen::VectorXd phases);

/// Phases n (phi_d - theta_a), n = 0..N-1, that make the path arriving at
/// spatial frequency theta_a leave towards phi_d with unit inner product.
RisConfiguration align_phases(double phi_d, double theta_a, int n_elements);

/// a_S^H(y_out) Gamma a_S(y_in) for an N-element RIS.
std::complex<double> ris_inner_product(const RisConfiguration &ris, double y_out,
                                       double y_in);

/// Normalized Dirichlet sum (1/N) sum_n exp(j n delta).
std::complex<double> dirichlet_sum(int n, double delta);

/// xi_{k,l,j} read from a decomposition. Throws Error{IndexOutOfRange}.
std::complex<double> effective_gain(const CascadedDecomposition &decomp, int k, int l, int j);

/// Common phase making all received cross terms add in phase:
/// -(arg alpha_r + arg alpha_t + (N_R - 1)/2 phi_a).
/// Throws Error{UndefinedPhase} when either gain is zero.
double common_phase_refinement(std::complex<double> alpha_r, std::complex<double> alpha_t,
                               double phi_a, int n_rx);

/// Frobenius norm of the composite contribution of every path not in active.
double leakage_norm(const CascadedDecomposition &decomp, const std::vector<PathIndex> &active);

} // namespace riscust

#endif // RISCUST_RIS_HPP
