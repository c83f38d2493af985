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

#ifndef RISCUST_ANALYSIS_HPP
#define RISCUST_ANALYSIS_HPP

#include "riscust/config.hpp"
#include "riscust/geometry.hpp"

#include <vector>

namespace riscust {

/// Ei(x) = integral_{-inf}^{x} e^t / t dt for x < 0. Throws Error{Domain}
/// for x >= 0.
double exp_integral_ei(double x);

/// e^c E_1(c) = -e^c Ei(-c) for c > 0, without overflow for large c.
double scaled_e1(double c);

/// Inputs of the closed-form expressions. `profile` holds N_S,n^2 rho_n^2 for
/// every RIS; the SM expressions use its first n_rx entries.
struct ClosedFormParams {
  std::vector<double> profile;
  double transmit_power = 0.0;
  double noise_power = 0.0;
  double kappa = 0.0;
  int l_r = 1;
  int n_tx = 1;
  int n_rx = 1;
  int m_r = 1;

  int n_ris() const { return static_cast<int>(profile.size()); }
  void validate() const;

  /// Every RIS with N_S rho = C.
  static ClosedFormParams equal_c(const SystemConfig &cfg);
  /// Profile taken from an actual deployment.
  static ClosedFormParams from_deployment(const SystemConfig &cfg, const Deployment &dep);
};

/// Per-stream constants sigma^2 L_R (kappa+1) / (E N_T N_S^2 rho^2 kappa).
std::vector<double> sm_constants(const ClosedFormParams &p);

/// -(1/ln 2) sum e^{c_n} Ei(-c_n).
double se_sm_approx(const std::vector<double> &c);
/// sum log2(1 + 1/c_n).
double se_sm_upper(const std::vector<double> &c);
/// Upper bound of the BF ergodic SE with the common-phase refinement.
double se_bf_upper(const ClosedFormParams &p);
/// Upper bound of the DB ergodic SE; equals se_bf_upper for m_r = 1.
double se_db_upper(const ClosedFormParams &p, int m_r);

/// Elementary symmetric polynomial of order k. Throws Error{IndexOutOfRange}.
double sym_func(const std::vector<double> &d, int k);

/// Transmit power (W) where the SM and BF upper bounds meet, found as the
/// positive root of the crossing polynomial. Throws Error{NoCrossing} if the
/// right-hand side is not positive and Error{InvalidArgument} if n_rx < 2.
double crossing_point(const ClosedFormParams &p);

/// Closed-form crossing points for n_rx = 2 and n_rx = 3 (general profile).
double crossing_point_nr2(const ClosedFormParams &p);
double crossing_point_nr3(const ClosedFormParams &p);
/// Equal-C special cases.
double crossing_point_nr2_equal_c(const ClosedFormParams &p, double c_scale);
double crossing_point_nr3_equal_c(const ClosedFormParams &p, double c_scale);

} // namespace riscust

#endif // RISCUST_ANALYSIS_HPP
