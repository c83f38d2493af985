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

// riscust: sweeps, crossing points and checks from the command line.

#include "selftest.hpp"

#include "riscust/analysis.hpp"
#include "riscust/config.hpp"
#include "riscust/errors.hpp"
#include "riscust/geometry.hpp"
#include "riscust/montecarlo.hpp"
#include "riscust/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace riscust;

// exit status: 0 ok, 1 unexpected, 2 usage (CLI11), 10+ one per ErrorKind
int exit_code(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidArgument: return 10;
  case ErrorKind::Configuration: return 11;
  case ErrorKind::DimensionMismatch: return 12;
  case ErrorKind::IndexOutOfRange: return 13;
  case ErrorKind::Domain: return 14;
  case ErrorKind::UndefinedPhase: return 15;
  case ErrorKind::Infeasible: return 16;
  case ErrorKind::SearchTooLarge: return 17;
  case ErrorKind::NoCrossing: return 18;
  case ErrorKind::Io: return 19;
  }
  return 1;
}

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;

  SystemConfig load() const {
    SystemConfig cfg = config_path.empty() ? SystemConfig{} : load_config(config_path);
    for (const auto &kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) fail(ErrorKind::Configuration, "override must be key=value: " + kv);
      set_field(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (seed) cfg.rng_seed = *seed;
    cfg.validate();
    return cfg;
  }
};

struct SweepOptions {
  std::string output = "-";
  std::string schemes = "sm,bf";
  std::string axis = "E_dBm=0:5:40";
  int angle_epochs = 200;
  int fading_epochs = 10;
  int threads = 0;
  double gamma_th_db = 10.0;
  std::uint64_t bits = 1000000;
};

void add_common(CLI::App *cmd, CommonOptions &c) {
  cmd->add_option("-c,--config", c.config_path, "Configuration file (key = value lines)");
  cmd->add_option("-s,--set", c.overrides, "Override a configuration key, key=value (repeatable)");
  cmd->add_option("--seed", c.seed, "Base seed (overrides rng_seed)");
}

void add_sweep(CLI::App *cmd, SweepOptions &s) {
  cmd->add_option("-o,--output", s.output, "CSV output path, '-' for stdout")->capture_default_str();
  cmd->add_option("--scheme", s.schemes, "Comma list of sm, bf, ds[:M], db[:M]")->capture_default_str();
  cmd->add_option("--axis", s.axis, "Sweep axis, name=start:step:stop or name=v1,v2,...")
      ->capture_default_str();
  cmd->add_option("--angle-epochs", s.angle_epochs, "Angle epochs per grid point")->capture_default_str();
  cmd->add_option("--fading-epochs", s.fading_epochs, "Fading epochs per angle epoch")
      ->capture_default_str();
  cmd->add_option("--threads", s.threads, "Worker threads (0 = RISCUST_THREADS or all cores)")
      ->capture_default_str();
}

TrialPlan make_plan(const SweepOptions &s, const SystemConfig &cfg) {
  TrialPlan plan;
  plan.axis = parse_axis(s.axis);
  plan.schemes = parse_schemes(s.schemes);
  plan.n_angle_epochs = s.angle_epochs;
  plan.n_fading_epochs = s.fading_epochs;
  plan.n_threads = s.threads;
  plan.gamma_th = db_to_linear(s.gamma_th_db);
  plan.ber_bits = s.bits;
  plan.base_seed = cfg.rng_seed;
  return plan;
}

void emit(const SweepResult &r, const std::string &path) {
  if (path == "-") {
    write_csv(r, std::cout);
  } else {
    write_csv(r, path);
    std::cerr << "wrote " << r.rows.size() << " rows to " << path << '\n';
  }
}

void print_crossing(const SystemConfig &cfg, int n_rx) {
  SystemConfig c = cfg;
  c.n_rx = n_rx;
  c.validate();
  const ClosedFormParams p = ClosedFormParams::equal_c(c);
  const double e_th = crossing_point(p);
  std::cout << std::setprecision(12);
  std::cout << "n_rx = " << n_rx << "\nE_th = " << e_th << " W (" << watts_to_dbm(e_th) << " dBm)\n";
  if (n_rx == 2 || n_rx == 3) {
    const double cf = n_rx == 2 ? crossing_point_nr2_equal_c(p, c.c_scale)
                                : crossing_point_nr3_equal_c(p, c.c_scale);
    std::cout << "closed form = " << cf << " W, relative delta = " << (e_th - cf) / cf << '\n';
  }
}

void print_analysis(const SystemConfig &cfg) {
  const Deployment dep = place_deployment_at(cfg, SiteLayout{}.rx_center);
  std::cout << std::setprecision(8);
  std::cout << "wavelength = " << cfg.wavelength() << " m\n";
  for (std::size_t k = 0; k < dep.n_ris(); ++k) {
    std::cout << "RIS " << k + 1 << ": u = " << dep.tx_direction_cosines[k] << ", position = ("
              << dep.ris_positions[k].x << ", " << dep.ris_positions[k].y
              << "), N_S = " << dep.ris_element_counts[k] << ", rho = " << dep.path_losses[k] << '\n';
  }
  const ClosedFormParams p = ClosedFormParams::equal_c(cfg);
  const auto c = sm_constants(p);
  std::cout << "E = " << watts_to_dbm(cfg.transmit_power) << " dBm\n";
  std::cout << "SM approximation = " << se_sm_approx(c) << " bit/s/Hz\n";
  std::cout << "SM upper bound   = " << se_sm_upper(c) << " bit/s/Hz\n";
  std::cout << "BF upper bound   = " << se_bf_upper(p) << " bit/s/Hz\n";
  std::cout << "DB upper bound   = " << se_db_upper(p, cfg.m_r) << " bit/s/Hz (M_R = " << cfg.m_r << ")\n";
  if (cfg.n_rx >= 2) {
    try {
      const double e_th = crossing_point(p);
      std::cout << "crossing point   = " << watts_to_dbm(e_th) << " dBm\n";
    } catch (const Error &e) {
      std::cout << "crossing point   : " << e.what() << '\n';
    }
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"RIS channel customization simulator"};
  app.require_subcommand(1);

  CommonOptions common;
  SweepOptions sweep;

  auto *se = app.add_subcommand("se-sweep", "Monte Carlo ergodic SE with closed-form companions");
  add_common(se, common);
  add_sweep(se, sweep);

  auto *ber = app.add_subcommand("ber-sweep", "QPSK bit error rate with Wilson intervals");
  add_common(ber, common);
  add_sweep(ber, sweep);
  ber->add_option("--bits", sweep.bits, "Bit budget per grid point and scheme")->capture_default_str();

  auto *outage = app.add_subcommand("outage-sweep", "Outage probability");
  add_common(outage, common);
  add_sweep(outage, sweep);
  outage->add_option("--gamma-th-db", sweep.gamma_th_db, "SNR threshold in dB")->capture_default_str();

  int n_rx = 2;
  auto *cross = app.add_subcommand("crossing-point", "Transmit power where the SM and BF bounds meet");
  add_common(cross, common);
  cross->add_option("--n-rx", n_rx, "Receive antennas")->capture_default_str();

  bool dump = false;
  std::string dump_path = "-";
  auto *analyze = app.add_subcommand("analyze", "Deployment summary and closed-form values");
  add_common(analyze, common);
  analyze->add_flag("--dump-config", dump, "Write the effective configuration instead");
  analyze->add_option("-o,--output", dump_path, "Where --dump-config writes, '-' for stdout");

  auto *selftest = app.add_subcommand("selftest", "Run the built-in invariant checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (se->parsed() || ber->parsed() || outage->parsed()) {
      const SystemConfig cfg = common.load();
      const TrialPlan plan = make_plan(sweep, cfg);
      if (se->parsed()) emit(estimate_ergodic_se(plan, cfg), sweep.output);
      else if (ber->parsed()) emit(estimate_ber(plan, cfg), sweep.output);
      else emit(estimate_outage(plan, cfg), sweep.output);
    } else if (cross->parsed()) {
      print_crossing(common.load(), n_rx);
    } else if (analyze->parsed()) {
      const SystemConfig cfg = common.load();
      if (!dump) {
        print_analysis(cfg);
      } else if (dump_path == "-") {
        dump_config(cfg, std::cout);
      } else {
        std::ofstream out(dump_path);
        if (!out) fail(ErrorKind::Io, "cannot open '" + dump_path + "'");
        dump_config(cfg, out);
        if (!out) fail(ErrorKind::Io, "write to '" + dump_path + "' failed");
      }
    } else if (selftest->parsed()) {
      const int failures = cli::run_selftest(std::cout);
      return failures == 0 ? 0 : 1;
    }
  } catch (const Error &e) {
    std::cerr << "riscust: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "riscust: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
