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

#include "riscust/analysis.hpp"
#include "riscust/channel.hpp"
#include "riscust/customization.hpp"
#include "riscust/geometry.hpp"
#include "riscust/montecarlo.hpp"
#include "riscust/transceivers.hpp"

#include <benchmark/benchmark.h>

using namespace riscust;

namespace {

struct Fixture {
  SystemConfig cfg;
  Deployment dep;
  ChannelSet ch;
  Eigen::MatrixXd cands;

  Fixture() {
    Philox g(1, 1);
    dep = place_deployment(cfg, g);
    ch = draw_channels(cfg, dep, g);
    cands = candidate_angles(ch);
  }
};

const Fixture &fixture() {
  static const Fixture f;
  return f;
}

void BM_SelectSm(benchmark::State &state) {
  const auto &f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(select_paths_sm(f.cands, f.cfg.n_rx));
}
BENCHMARK(BM_SelectSm);

void BM_SelectBf(benchmark::State &state) {
  const auto &f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(select_paths_bf(f.cands, f.cfg.n_rx));
}
BENCHMARK(BM_SelectBf);

void BM_CustomizedChannel(benchmark::State &state) {
  const auto &f = fixture();
  const auto sel = select_paths_sm(f.cands, f.cfg.n_rx);
  const bool refine = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_customized_channel(sel, f.ch, f.dep, refine));
}
BENCHMARK(BM_CustomizedChannel)->Arg(0)->Arg(1);

void BM_DrawChannels(benchmark::State &state) {
  const auto &f = fixture();
  Philox g(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(draw_channels(f.cfg, f.dep, g));
}
BENCHMARK(BM_DrawChannels);

void BM_Ei(benchmark::State &state) {
  const double x = -static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(exp_integral_ei(x));
}
BENCHMARK(BM_Ei)->Arg(1)->Arg(50)->Arg(500);

void BM_CrossingPoint(benchmark::State &state) {
  SystemConfig cfg;
  cfg.n_rx = static_cast<int>(state.range(0));
  const auto p = ClosedFormParams::equal_c(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(crossing_point(p));
}
BENCHMARK(BM_CrossingPoint)->Arg(2)->Arg(4);

void BM_SweepPoint(benchmark::State &state) {
  TrialPlan plan;
  plan.axis = parse_axis("E_dBm=20");
  plan.schemes = parse_schemes("sm,bf,ds:2,db:2");
  plan.n_angle_epochs = 1;
  plan.n_fading_epochs = 10;
  plan.n_threads = 1;
  const SystemConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_ergodic_se(plan, cfg));
}
BENCHMARK(BM_SweepPoint)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
