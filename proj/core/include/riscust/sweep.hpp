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

#ifndef RISCUST_SWEEP_HPP
#define RISCUST_SWEEP_HPP

#include "riscust/config.hpp"
#include "riscust/customization.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace riscust {

/// A named sweep axis in display units (dBm for power, dB for kappa).
struct SweepAxis {
  std::string name;
  std::vector<double> values;
};

/// E_dBm, kappa_dB, L_R, N_T, C, sigma_e, M_R.
const std::vector<std::string> &axis_names();

/// Parses "name=start:step:stop" (inclusive) or "name=v1,v2,...".
/// Throws Error{InvalidArgument} on a bad name, an empty or unsorted grid.
SweepAxis parse_axis(std::string_view spec);

/// Writes the axis value into the matching config field and revalidates.
void apply_axis(SystemConfig &cfg, const std::string &name, double value);

/// A scheme with an optional reconfiguration count (0 = take m_r from config).
struct SchemeSpec {
  Scheme scheme = Scheme::SM;
  int m_r = 0;

  int resolved_m_r(const SystemConfig &cfg) const;
  std::string label(const SystemConfig &cfg) const;
};

/// Parses "sm,bf,ds:2,db" style lists.
std::vector<SchemeSpec> parse_schemes(std::string_view list);

struct SweepRow {
  double axis_value = 0.0;
  std::string scheme;
  double mean = 0.0;
  double stderr_mean = 0.0;
  double closed_form_1 = 0.0; ///< NaN when not applicable
  double closed_form_2 = 0.0;
  std::uint64_t n_trials = 0;
};

struct SweepResult {
  std::string axis_name;
  std::string metric; ///< "se", "ber" or "outage"
  std::vector<SweepRow> rows;

  /// Row for (axis value, scheme label); throws Error{IndexOutOfRange}.
  const SweepRow &at(double axis_value, const std::string &scheme) const;
};

/// Shortest text with 12 significant digits; empty for NaN.
std::string format_number(double value);

/// Header plus one line per row. Throws Error{InvalidArgument} for an empty result.
void write_csv(const SweepResult &result, std::ostream &out);
/// Same, to a file; nothing is created for an empty result. Throws Error{Io}.
void write_csv(const SweepResult &result, const std::string &path);

} // namespace riscust

#endif // RISCUST_SWEEP_HPP
