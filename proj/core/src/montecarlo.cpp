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

#include "riscust/montecarlo.hpp"

#include "riscust/analysis.hpp"
#include "riscust/customization.hpp"
#include "riscust/errors.hpp"
#include "riscust/geometry.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

namespace riscust {

namespace {

enum class Metric { SE, BER, Outage };

const char *metric_name(Metric m) {
  switch (m) {
  case Metric::SE: return "se";
  case Metric::BER: return "ber";
  case Metric::Outage: return "outage";
  }
  return "?";
}

// per scheme: samples (SE / outage) or error counts (BER)
struct TaskOutput {
  std::vector<std::vector<double>> samples;
  std::vector<std::uint64_t> errors;
  std::vector<std::uint64_t> bits;
};

double wrap_pi(double x) {
  double r = std::remainder(x, 2.0 * std::numbers::pi);
  if (r >= std::numbers::pi) r -= 2.0 * std::numbers::pi;
  return r;
}

void copy_gains(ChannelSet &dst, const ChannelSet &src) {
  for (std::size_t k = 0; k < src.n_ris(); ++k) {
    for (std::size_t l = 0; l < src.tx_ris[k].paths.size(); ++l) {
      dst.tx_ris[k].paths[l].gain = src.tx_ris[k].paths[l].gain;
    }
    for (std::size_t l = 0; l < src.ris_rx[k].paths.size(); ++l) {
      dst.ris_rx[k].paths[l].gain = src.ris_rx[k].paths[l].gain;
    }
  }
}

int bits_per_vector(Scheme s, const SystemConfig &cfg) {
  return (s == Scheme::SM || s == Scheme::DS) ? 2 * cfg.n_rx : 2;
}

struct Engine {
  const TrialPlan &plan;
  Metric metric;
  std::uint64_t seed;
  std::vector<SystemConfig> point_cfg;

  TaskOutput run_task(std::size_t g, int a) const {
    const SystemConfig &cfg = point_cfg[g];
    const auto n_schemes = plan.schemes.size();
    TaskOutput out;
    out.samples.resize(n_schemes);
    out.errors.assign(n_schemes, 0);
    out.bits.assign(n_schemes, 0);

    const auto epoch = static_cast<std::uint64_t>(a);
    Philox geo = make_stream(seed, epoch, 0, StreamPurpose::Geometry);
    const Deployment dep = place_deployment(cfg, geo);
    ChannelSet truth = draw_channels(cfg, dep, geo);
    Philox err = make_stream(seed, epoch, 0, StreamPurpose::AngleError);
    ChannelSet design = inject_angle_error(truth, cfg.angle_error_std, err);

    const Eigen::MatrixXd cands = candidate_angles(design);
    std::vector<PathSelection> sel;
    for (const auto &spec : plan.schemes) {
      sel.push_back(select_paths(cands, cfg.n_rx, spec.scheme, spec.resolved_m_r(cfg)));
    }

    std::uint64_t symbols = 0;
    const auto realizations =
        static_cast<std::uint64_t>(plan.n_angle_epochs) * static_cast<std::uint64_t>(plan.n_fading_epochs);

    for (int f = 0; f < plan.n_fading_epochs; ++f) {
      Philox fad = make_stream(seed, epoch, static_cast<std::uint64_t>(f), StreamPurpose::Fading);
      redraw_fading(truth, cfg, fad);
      copy_gains(design, truth);
      for (std::size_t s = 0; s < n_schemes; ++s) {
        const Scheme scheme = plan.schemes[s].scheme;
        const auto slots = build_slots(sel[s], design, dep, refines_ris(scheme), &truth);
        if (metric == Metric::BER) {
          const auto bpv = static_cast<std::uint64_t>(bits_per_vector(scheme, cfg));
          symbols = (plan.ber_bits + realizations * bpv - 1) / (realizations * bpv);
          Philox noise = make_stream(seed, epoch, static_cast<std::uint64_t>(f), StreamPurpose::Noise);
          const SchemeResult r = ber_trial(scheme, slots, cfg, symbols, noise);
          out.errors[s] += r.bit_errors;
          out.bits[s] += r.bits_sent;
        } else {
          const SchemeResult r = run_scheme(scheme, slots, cfg, plan.gamma_th);
          out.samples[s].push_back(metric == Metric::SE ? r.se_bits_per_hz : (r.outage ? 1.0 : 0.0));
        }
      }
    }
    return out;
  }
};

std::pair<double, double> se_companions(const SchemeSpec &spec, const SystemConfig &cfg) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  const ClosedFormParams p = ClosedFormParams::equal_c(cfg);
  switch (spec.scheme) {
  case Scheme::SM: {
    const auto c = sm_constants(p);
    return {se_sm_approx(c), se_sm_upper(c)};
  }
  case Scheme::BF: return {se_bf_upper(p), nan};
  case Scheme::DB: return {se_db_upper(p, spec.resolved_m_r(cfg)), nan};
  case Scheme::DS: break;
  }
  return {nan, nan};
}

SweepResult run_sweep(const TrialPlan &plan, const SystemConfig &base, Metric metric) {
  plan.validate();
  base.validate();
  Engine engine{plan, metric, plan.base_seed.value_or(base.rng_seed), {}};
  for (double v : plan.axis.values) {
    SystemConfig cfg = base;
    apply_axis(cfg, plan.axis.name, v);
    engine.point_cfg.push_back(cfg);
  }

  const std::size_t n_points = plan.axis.values.size();
  const auto n_epochs = static_cast<std::size_t>(plan.n_angle_epochs);
  const std::size_t n_tasks = n_points * n_epochs;
  std::vector<TaskOutput> outputs(n_tasks);

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_task = n_tasks;
  std::exception_ptr failure;
  const auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= n_tasks) return;
      {
        std::lock_guard lock(mu);
        if (failure && failed_task < t) return;
      }
      try {
        outputs[t] = engine.run_task(t / n_epochs, static_cast<int>(t % n_epochs));
      } catch (...) {
        std::lock_guard lock(mu);
        if (t < failed_task) {
          failed_task = t;
          failure = std::current_exception();
        }
      }
    }
  };
  const int n_threads = std::min<int>(resolve_thread_count(plan.n_threads), static_cast<int>(n_tasks));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  result.axis_name = plan.axis.name;
  result.metric = metric_name(metric);
  for (std::size_t g = 0; g < n_points; ++g) {
    const SystemConfig &cfg = engine.point_cfg[g];
    for (std::size_t s = 0; s < plan.schemes.size(); ++s) {
      SweepRow row;
      row.axis_value = plan.axis.values[g];
      row.scheme = plan.schemes[s].label(cfg);
      row.closed_form_1 = row.closed_form_2 = std::numeric_limits<double>::quiet_NaN();
      if (metric == Metric::BER) {
        std::uint64_t errors = 0;
        std::uint64_t bits = 0;
        for (std::size_t a = 0; a < n_epochs; ++a) {
          errors += outputs[g * n_epochs + a].errors[s];
          bits += outputs[g * n_epochs + a].bits[s];
        }
        const double p = bits ? static_cast<double>(errors) / static_cast<double>(bits) : 0.0;
        row.mean = p;
        row.stderr_mean = bits ? std::sqrt(p * (1.0 - p) / static_cast<double>(bits)) : 0.0;
        std::tie(row.closed_form_1, row.closed_form_2) = wilson_interval(errors, bits);
        row.n_trials = bits;
      } else {
        double sum = 0.0;
        std::uint64_t n = 0;
        for (std::size_t a = 0; a < n_epochs; ++a) {
          for (double v : outputs[g * n_epochs + a].samples[s]) {
            sum += v;
            ++n;
          }
        }
        const double mean = sum / static_cast<double>(n);
        double ss = 0.0;
        for (std::size_t a = 0; a < n_epochs; ++a) {
          for (double v : outputs[g * n_epochs + a].samples[s]) ss += (v - mean) * (v - mean);
        }
        row.mean = mean;
        row.stderr_mean = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
        row.n_trials = n;
        if (metric == Metric::SE) {
          std::tie(row.closed_form_1, row.closed_form_2) = se_companions(plan.schemes[s], cfg);
        }
      }
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

} // namespace

void TrialPlan::validate() const {
  if (axis.values.empty()) fail(ErrorKind::InvalidArgument, "sweep grid is empty");
  if (schemes.empty()) fail(ErrorKind::InvalidArgument, "no schemes to run");
  if (n_angle_epochs < 1 || n_fading_epochs < 1) {
    fail(ErrorKind::InvalidArgument, "epoch counts must be positive");
  }
  if (!(gamma_th >= 0.0)) fail(ErrorKind::InvalidArgument, "outage threshold must be >= 0");
  if (ber_bits < 1) fail(ErrorKind::InvalidArgument, "bit budget must be positive");
  if (n_threads < 0) fail(ErrorKind::InvalidArgument, "thread count must be >= 0");
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char *env = std::getenv("RISCUST_THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 4096) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

ChannelSet inject_angle_error(const ChannelSet &truth, double sigma, Philox &rng) {
  if (!(sigma >= 0.0)) fail(ErrorKind::InvalidArgument, "angle error std must be >= 0");
  ChannelSet out = truth;
  if (sigma == 0.0) return out;
  for (auto &link : out.ris_rx) {
    for (auto &p : link.paths) {
      p.aoa = wrap_pi(p.aoa + sigma * rng.normal());
      p.aod = wrap_pi(p.aod + sigma * rng.normal());
    }
  }
  return out;
}

SweepResult estimate_ergodic_se(const TrialPlan &plan, const SystemConfig &cfg) {
  return run_sweep(plan, cfg, Metric::SE);
}

SweepResult estimate_ber(const TrialPlan &plan, const SystemConfig &cfg) {
  return run_sweep(plan, cfg, Metric::BER);
}

SweepResult estimate_outage(const TrialPlan &plan, const SystemConfig &cfg) {
  return run_sweep(plan, cfg, Metric::Outage);
}

std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  if (k > n) fail(ErrorKind::InvalidArgument, "more successes than trials");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double centre = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

} // namespace riscust
