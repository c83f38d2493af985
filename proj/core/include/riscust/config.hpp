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

#ifndef RISCUST_CONFIG_HPP
#define RISCUST_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace riscust {

/// System and environment parameters. All quantities are SI / linear;
/// decibel units only appear at the CLI boundary.
struct SystemConfig {
  double carrier_frequency = 3.5e9; ///< Hz
  int n_tx = 16;
  int n_rx = 4;
  int n_ris = 4;
  double rician_kappa = 10.0; ///< linear (10 dB)
  int l_t = 2;                ///< NLoS paths per Tx-RIS subchannel
  int l_r = 10;               ///< paths per RIS-Rx subchannel
  double noise_power = 1e-13; ///< W (-100 dBm)
  double transmit_power = 0.1; ///< W (20 dBm)
  double c_scale = 1e-6;      ///< target N_S * rho per RIS
  double dft_offset = 0.0;    ///< rad, offset of the Tx DFT grid
  int m_r = 1;                ///< RIS reconfigurations per symbol
  std::uint64_t rng_seed = 20230101;
  double angle_error_std = 0.0; ///< rad, RIS-Rx angle estimation error

  double wavelength() const;

  /// Throws Error{Configuration} on the first violated invariant.
  void validate() const;

  bool operator==(const SystemConfig &) const = default;
};

/// Names accepted by `set_field`, in file order.
const std::vector<std::string> &config_keys();

/// Assign one field from its text form. Throws Error{Configuration} on
/// an unknown key or an unparsable value.
void set_field(SystemConfig &cfg, std::string_view key, std::string_view value);

/// Parse `key = value` lines. '#' starts a comment; blank lines are skipped.
/// Keys not mentioned keep their defaults. The result is validated.
SystemConfig parse_config(std::istream &in);
SystemConfig load_config(const std::string &path);

/// Writes every field as `key = value` with round-trip precision.
void dump_config(const SystemConfig &cfg, std::ostream &out);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double db_to_linear(double db);
double linear_to_db(double linear);

} // namespace riscust

#endif // RISCUST_CONFIG_HPP
