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

#ifndef RISCUST_TRANSCEIVERS_HPP
#define RISCUST_TRANSCEIVERS_HPP

#include "riscust/config.hpp"
#include "riscust/customization.hpp"
#include "riscust/rng.hpp"

#include <cstdint>
#include <vector>

namespace riscust {

struct SchemeResult {
  Scheme scheme = Scheme::SM;
  int m_r = 1;
  double se_bits_per_hz = 0.0;
  std::vector<double> post_combine_snr; ///< per stream (one entry for BF/DB)
  bool outage = false;
  std::uint64_t bit_errors = 0;
  std::uint64_t bits_sent = 0;

  double min_snr() const;
};

/// Default outage threshold, 10 dB.
inline constexpr double kDefaultGammaTh = 10.0;

/// SM over one customized channel. Equivalent to run_ds with one slot.
SchemeResult run_sm(const CustomizedChannel &custom, const SystemConfig &cfg,
                    double gamma_th = kDefaultGammaTh);
/// BF over one refined customized channel. Equivalent to run_db with one slot.
SchemeResult run_bf(const CustomizedChannel &custom, const SystemConfig &cfg,
                    double gamma_th = kDefaultGammaTh);

/// DS over M_R slots sharing the precoder; slot m >= 2 combiner columns are
/// phase-rotated onto slot 1. Throws Error{DimensionMismatch} on an empty or
/// inconsistent slot list.
SchemeResult run_ds(const std::vector<CustomizedChannel> &slots, const SystemConfig &cfg,
                    double gamma_th = kDefaultGammaTh);
SchemeResult run_db(const std::vector<CustomizedChannel> &slots, const SystemConfig &cfg,
                    double gamma_th = kDefaultGammaTh);

/// Dispatches on the scheme; SM/BF use slots[0] only.
SchemeResult run_scheme(Scheme scheme, const std::vector<CustomizedChannel> &slots,
                        const SystemConfig &cfg, double gamma_th = kDefaultGammaTh);

/// Gray-mapped QPSK symbol for two bits, unit energy.
std::complex<double> qpsk_modulate(int b0, int b1);
/// Hard decision; returns the two bits packed as b0 | b1 << 1.
int qpsk_demodulate(std::complex<double> y);

/// Sends `symbols` QPSK symbol vectors through the exact channel(s) with the
/// scheme's transceiver and counts bit errors. Detection is scalar per stream
/// after combining (slots combined coherently for DS/DB).
SchemeResult ber_trial(Scheme scheme, const std::vector<CustomizedChannel> &slots,
                       const SystemConfig &cfg, std::uint64_t symbols, Philox &rng);

} // namespace riscust

#endif // RISCUST_TRANSCEIVERS_HPP
