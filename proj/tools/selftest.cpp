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

#include "selftest.hpp"

#include "riscust/analysis.hpp"
#include "riscust/channel.hpp"
#include "riscust/config.hpp"
#include "riscust/customization.hpp"
#include "riscust/geometry.hpp"
#include "riscust/montecarlo.hpp"
#include "riscust/rng.hpp"
#include "riscust/transceivers.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace riscust::cli {

namespace {

struct Check {
  std::string name;
  std::function<bool()> body;
};

bool philox_known_answer() {
  Philox g(0, 0);
  const std::uint32_t want[4] = {0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u};
  for (auto w : want) {
    if (g() != w) return false;
  }
  return true;
}

bool config_round_trip() {
  SystemConfig cfg;
  cfg.transmit_power = 0.0123456789;
  cfg.rician_kappa = std::sqrt(2.0);
  cfg.rng_seed = 987654321;
  std::stringstream ss;
  dump_config(cfg, ss);
  return parse_config(ss) == cfg;
}

bool ei_values() {
  // Ei(-1), Ei(-10)
  const bool a = std::abs(exp_integral_ei(-1.0) + 0.21938393439552027) < 1e-13;
  const bool b = std::abs(exp_integral_ei(-10.0) + 4.156968929685324e-06) < 1e-17;
  const bool c = std::abs(exp_integral_ei(-6.0 + 1e-12) - exp_integral_ei(-6.0 - 1e-12)) < 1e-12;
  return a && b && c;
}

bool crossing_agrees() {
  SystemConfig cfg;
  cfg.n_rx = 2;
  const ClosedFormParams p = ClosedFormParams::equal_c(cfg);
  const double num = crossing_point(p);
  const double cf = crossing_point_nr2_equal_c(p, cfg.c_scale);
  return std::abs(num - cf) <= 1e-9 * cf;
}

bool scheme_reductions() {
  SystemConfig cfg;
  Philox rng = make_stream(cfg.rng_seed, 0, 0, StreamPurpose::Test);
  const Deployment dep = place_deployment(cfg, rng);
  const ChannelSet ch = draw_channels(cfg, dep, rng);
  const auto cands = candidate_angles(ch);
  const auto sm = select_paths(cands, cfg.n_rx, Scheme::SM, 1);
  const auto ds = select_paths(cands, cfg.n_rx, Scheme::DS, 1);
  const auto bf = select_paths(cands, cfg.n_rx, Scheme::BF, 1);
  const auto db = select_paths(cands, cfg.n_rx, Scheme::DB, 1);
  const auto r_sm = run_scheme(Scheme::SM, build_slots(sm, ch, dep, false), cfg);
  const auto r_ds = run_scheme(Scheme::DS, build_slots(ds, ch, dep, false), cfg);
  const auto r_bf = run_scheme(Scheme::BF, build_slots(bf, ch, dep, true), cfg);
  const auto r_db = run_scheme(Scheme::DB, build_slots(db, ch, dep, true), cfg);
  return r_sm.se_bits_per_hz == r_ds.se_bits_per_hz && r_sm.post_combine_snr == r_ds.post_combine_snr &&
         r_bf.se_bits_per_hz == r_db.se_bits_per_hz && r_bf.post_combine_snr == r_db.post_combine_snr &&
         r_sm.se_bits_per_hz > 0.0 && r_bf.se_bits_per_hz > 0.0;
}

bool thread_invariance() {
  SystemConfig cfg;
  TrialPlan plan;
  plan.axis = parse_axis("E_dBm=10,30");
  plan.schemes = parse_schemes("sm,bf");
  plan.n_angle_epochs = 3;
  plan.n_fading_epochs = 2;
  std::ostringstream a;
  std::ostringstream b;
  plan.n_threads = 1;
  write_csv(estimate_ergodic_se(plan, cfg), a);
  plan.n_threads = 3;
  write_csv(estimate_ergodic_se(plan, cfg), b);
  return a.str() == b.str();
}

} // namespace

int run_selftest(std::ostream &out) {
  const std::vector<Check> checks = {
      {"philox known answer", philox_known_answer},
      {"config round trip", config_round_trip},
      {"exponential integral", ei_values},
      {"crossing point N_R=2", crossing_agrees},
      {"DS(1)=SM, DB(1)=BF", scheme_reductions},
      {"thread-count invariance", thread_invariance},
  };
  int failures = 0;
  for (const auto &c : checks) {
    bool ok = false;
    try {
      ok = c.body();
    } catch (const std::exception &e) {
      out << "  exception: " << e.what() << '\n';
    }
    out << (ok ? "ok    " : "FAIL  ") << c.name << '\n';
    if (!ok) ++failures;
  }
  return failures;
}

} // namespace riscust::cli
