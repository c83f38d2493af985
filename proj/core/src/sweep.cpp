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

#include "riscust/sweep.hpp"

#include "riscust/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

namespace riscust {

namespace {

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::InvalidArgument, "bad number '" + std::string(text) + "' in " + std::string(what));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int as_count(double value, const std::string &name) {
  if (value != std::round(value)) fail(ErrorKind::InvalidArgument, name + " must be an integer");
  return static_cast<int>(value);
}

} // namespace

const std::vector<std::string> &axis_names() {
  static const std::vector<std::string> names = {"E_dBm", "kappa_dB", "L_R", "N_T",
                                                 "C",     "sigma_e",  "M_R"};
  return names;
}

SweepAxis parse_axis(std::string_view spec) {
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos) fail(ErrorKind::InvalidArgument, "axis must look like name=grid");
  SweepAxis axis;
  axis.name = std::string(spec.substr(0, eq));
  const auto &names = axis_names();
  if (std::find(names.begin(), names.end(), axis.name) == names.end()) {
    fail(ErrorKind::InvalidArgument, "unknown axis '" + axis.name + "'");
  }
  const std::string_view grid = spec.substr(eq + 1);
  if (grid.find(':') != std::string_view::npos) {
    const auto parts = split(grid, ':');
    if (parts.size() != 3) fail(ErrorKind::InvalidArgument, "range must be start:step:stop");
    const double start = parse_double(parts[0], "axis start");
    const double step = parse_double(parts[1], "axis step");
    const double stop = parse_double(parts[2], "axis stop");
    if (!(step > 0.0)) fail(ErrorKind::InvalidArgument, "axis step must be positive");
    if (stop < start) fail(ErrorKind::InvalidArgument, "axis stop is below start");
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (n > 100000) fail(ErrorKind::InvalidArgument, "axis grid too long");
    for (long i = 0; i < n; ++i) axis.values.push_back(start + static_cast<double>(i) * step);
  } else if (!grid.empty()) {
    for (auto item : split(grid, ',')) axis.values.push_back(parse_double(item, "axis list"));
  }
  if (axis.values.empty()) fail(ErrorKind::InvalidArgument, "axis grid is empty");
  if (!std::is_sorted(axis.values.begin(), axis.values.end()) ||
      std::adjacent_find(axis.values.begin(), axis.values.end()) != axis.values.end()) {
    fail(ErrorKind::InvalidArgument, "axis grid must be strictly increasing");
  }
  return axis;
}

void apply_axis(SystemConfig &cfg, const std::string &name, double value) {
  if (name == "E_dBm") cfg.transmit_power = dbm_to_watts(value);
  else if (name == "kappa_dB") cfg.rician_kappa = db_to_linear(value);
  else if (name == "L_R") cfg.l_r = as_count(value, name);
  else if (name == "N_T") cfg.n_tx = as_count(value, name);
  else if (name == "C") cfg.c_scale = value;
  else if (name == "sigma_e") cfg.angle_error_std = value;
  else if (name == "M_R") cfg.m_r = as_count(value, name);
  else fail(ErrorKind::InvalidArgument, "unknown axis '" + name + "'");
  cfg.validate();
}

int SchemeSpec::resolved_m_r(const SystemConfig &cfg) const {
  if (scheme == Scheme::SM || scheme == Scheme::BF) return 1;
  return m_r > 0 ? m_r : cfg.m_r;
}

std::string SchemeSpec::label(const SystemConfig &cfg) const {
  std::string s = to_string(scheme);
  if (scheme == Scheme::DS || scheme == Scheme::DB) s += ":" + std::to_string(resolved_m_r(cfg));
  return s;
}

std::vector<SchemeSpec> parse_schemes(std::string_view list) {
  std::vector<SchemeSpec> out;
  for (auto item : split(list, ',')) {
    SchemeSpec spec;
    std::string_view name = item;
    if (const auto colon = item.find(':'); colon != std::string_view::npos) {
      name = item.substr(0, colon);
      const double m = parse_double(item.substr(colon + 1), "scheme M_R");
      if (m < 1 || m != std::round(m)) fail(ErrorKind::InvalidArgument, "scheme M_R must be a positive integer");
      spec.m_r = static_cast<int>(m);
    }
    if (name == "sm") spec.scheme = Scheme::SM;
    else if (name == "bf") spec.scheme = Scheme::BF;
    else if (name == "ds") spec.scheme = Scheme::DS;
    else if (name == "db") spec.scheme = Scheme::DB;
    else fail(ErrorKind::InvalidArgument, "unknown scheme '" + std::string(item) + "'");
    if ((spec.scheme == Scheme::SM || spec.scheme == Scheme::BF) && spec.m_r > 1) {
      fail(ErrorKind::InvalidArgument, "sm and bf take no reconfiguration count");
    }
    out.push_back(spec);
  }
  if (out.empty()) fail(ErrorKind::InvalidArgument, "no schemes given");
  return out;
}

const SweepRow &SweepResult::at(double axis_value, const std::string &scheme) const {
  for (const auto &r : rows) {
    if (r.axis_value == axis_value && r.scheme == scheme) return r;
  }
  fail(ErrorKind::IndexOutOfRange, "no row for scheme " + scheme);
}

std::string format_number(double value) {
  if (std::isnan(value)) return {};
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
  if (ec != std::errc()) fail(ErrorKind::Io, "number formatting failed");
  return std::string(buf.data(), ptr);
}

void write_csv(const SweepResult &result, std::ostream &out) {
  if (result.rows.empty()) fail(ErrorKind::InvalidArgument, "refusing to write an empty sweep");
  out << result.axis_name << ",scheme,mc_mean,mc_stderr,closed_form_1,closed_form_2,n_trials\n";
  for (const auto &r : result.rows) {
    out << format_number(r.axis_value) << ',' << r.scheme << ',' << format_number(r.mean) << ','
        << format_number(r.stderr_mean) << ',' << format_number(r.closed_form_1) << ','
        << format_number(r.closed_form_2) << ',' << r.n_trials << '\n';
  }
}

void write_csv(const SweepResult &result, const std::string &path) {
  if (result.rows.empty()) fail(ErrorKind::InvalidArgument, "refusing to write an empty sweep");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
  write_csv(result, out);
  out.flush();
  if (!out) fail(ErrorKind::Io, "write to '" + path + "' failed");
}

} // namespace riscust
