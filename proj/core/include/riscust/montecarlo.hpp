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

#ifndef RISCUST_MONTECARLO_HPP
#define RISCUST_MONTECARLO_HPP

#include "riscust/channel.hpp"
#include "riscust/config.hpp"
#include "riscust/rng.hpp"
#include "riscust/sweep.hpp"
#include "riscust/transceivers.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace riscust {

/// What a sweep runs. Every (grid point, angle epoch) is one task; the
/// reduction order is fixed so results do not depend on the thread count.
struct TrialPlan {
  SweepAxis axis;
  std::vector<SchemeSpec> schemes;
  int n_angle_epochs = 100;
  int n_fading_epochs = 10;
  double gamma_th = kDefaultGammaTh;      ///< linear
  std::optional<std::uint64_t> base_seed; ///< defaults to cfg.rng_seed
  int n_threads = 0;                      ///< 0 = RISCUST_THREADS or hardware
  std::uint64_t ber_bits = 200000;        ///< target bits per (point, scheme)

  /// Throws Error{InvalidArgument}.
  void validate() const;
};

/// Workers to use: requested if positive, else RISCUST_THREADS, else
/// hardware concurrency (at least 1).
int resolve_thread_count(int requested);

/// Copy of `truth` whose RIS-Rx arrival and departure spatial frequencies get
/// N(0, sigma^2) errors. Gains and Tx-RIS links are unchanged. sigma = 0
/// returns an exact copy without consuming the generator.
ChannelSet inject_angle_error(const ChannelSet &truth, double sigma, Philox &rng);

/// Ergodic SE. closed_form_1 / closed_form_2 hold the equal-C companions:
/// SM approximation and upper bound, the BF bound, the DB bound (DS has none).
SweepResult estimate_ergodic_se(const TrialPlan &plan, const SystemConfig &cfg);

/// Bit error rate with a 95% Wilson interval in closed_form_1 / closed_form_2;
/// n_trials counts bits.
SweepResult estimate_ber(const TrialPlan &plan, const SystemConfig &cfg);

/// Outage probability: min post-combining SNR below plan.gamma_th.
SweepResult estimate_outage(const TrialPlan &plan, const SystemConfig &cfg);

/// Wilson score interval for k successes in n trials.
std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z = 1.959964);

} // namespace riscust

#endif // RISCUST_MONTECARLO_HPP
