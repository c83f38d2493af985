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

#include "riscust/config.hpp"

#include "riscust/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace riscust {

const char *to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::InvalidArgument: return "invalid argument";
  case ErrorKind::Configuration: return "configuration error";
  case ErrorKind::DimensionMismatch: return "dimension mismatch";
  case ErrorKind::IndexOutOfRange: return "index out of range";
  case ErrorKind::Domain: return "domain error";
  case ErrorKind::UndefinedPhase: return "undefined phase";
  case ErrorKind::Infeasible: return "infeasible selection";
  case ErrorKind::SearchTooLarge: return "search space too large";
  case ErrorKind::NoCrossing: return "no crossing point";
  case ErrorKind::Io: return "I/O error";
  }
  return "unknown error";
}

namespace {

constexpr double kSpeedOfLight = 299792458.0;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T> T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const char *begin = text.data();
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    fail(ErrorKind::Configuration,
         "bad value '" + std::string(text) + "' for key '" + std::string(key) + "'");
  }
  return value;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), ptr);
}

void require(bool ok, const std::string &message) {
  if (!ok) fail(ErrorKind::Configuration, message);
}

} // namespace

double SystemConfig::wavelength() const { return kSpeedOfLight / carrier_frequency; }

void SystemConfig::validate() const {
  require(carrier_frequency > 0.0, "carrier_frequency must be positive");
  require(n_rx >= 1, "n_rx must be at least 1");
  require(n_tx >= n_rx, "n_tx must be >= n_rx");
  require(n_ris >= n_rx, "n_ris must be >= n_rx");
  require(rician_kappa > 0.0, "rician_kappa must be positive");
  require(l_t >= 0, "l_t must be non-negative");
  require(l_r >= 1, "l_r must be at least 1");
  require(noise_power > 0.0, "noise_power must be positive");
  require(transmit_power >= 0.0, "transmit_power must be non-negative");
  require(c_scale > 0.0, "c_scale must be positive");
  require(std::isfinite(dft_offset), "dft_offset must be finite");
  require(m_r >= 1, "m_r must be at least 1");
  require(angle_error_std >= 0.0, "angle_error_std must be non-negative");
}

const std::vector<std::string> &config_keys() {
  static const std::vector<std::string> keys = {
      "carrier_frequency", "n_tx",        "n_rx",           "n_ris",
      "rician_kappa",      "l_t",         "l_r",            "noise_power",
      "transmit_power",    "c_scale",     "dft_offset",     "m_r",
      "rng_seed",          "angle_error_std"};
  return keys;
}

void set_field(SystemConfig &cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "carrier_frequency") cfg.carrier_frequency = parse_number<double>(key, value);
  else if (key == "n_tx") cfg.n_tx = parse_number<int>(key, value);
  else if (key == "n_rx") cfg.n_rx = parse_number<int>(key, value);
  else if (key == "n_ris") cfg.n_ris = parse_number<int>(key, value);
  else if (key == "rician_kappa") cfg.rician_kappa = parse_number<double>(key, value);
  else if (key == "l_t") cfg.l_t = parse_number<int>(key, value);
  else if (key == "l_r") cfg.l_r = parse_number<int>(key, value);
  else if (key == "noise_power") cfg.noise_power = parse_number<double>(key, value);
  else if (key == "transmit_power") cfg.transmit_power = parse_number<double>(key, value);
  else if (key == "c_scale") cfg.c_scale = parse_number<double>(key, value);
  else if (key == "dft_offset") cfg.dft_offset = parse_number<double>(key, value);
  else if (key == "m_r") cfg.m_r = parse_number<int>(key, value);
  else if (key == "rng_seed") cfg.rng_seed = parse_number<std::uint64_t>(key, value);
  else if (key == "angle_error_std") cfg.angle_error_std = parse_number<double>(key, value);
  else fail(ErrorKind::Configuration, "unknown configuration key '" + std::string(key) + "'");
}

SystemConfig parse_config(std::istream &in) {
  SystemConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorKind::Configuration,
           "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    set_field(cfg, trim(view.substr(0, eq)), view.substr(eq + 1));
  }
  cfg.validate();
  return cfg;
}

SystemConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open config file '" + path + "'");
  return parse_config(in);
}

void dump_config(const SystemConfig &cfg, std::ostream &out) {
  out << "carrier_frequency = " << format_double(cfg.carrier_frequency) << '\n'
      << "n_tx = " << cfg.n_tx << '\n'
      << "n_rx = " << cfg.n_rx << '\n'
      << "n_ris = " << cfg.n_ris << '\n'
      << "rician_kappa = " << format_double(cfg.rician_kappa) << '\n'
      << "l_t = " << cfg.l_t << '\n'
      << "l_r = " << cfg.l_r << '\n'
      << "noise_power = " << format_double(cfg.noise_power) << '\n'
      << "transmit_power = " << format_double(cfg.transmit_power) << '\n'
      << "c_scale = " << format_double(cfg.c_scale) << '\n'
      << "dft_offset = " << format_double(cfg.dft_offset) << '\n'
      << "m_r = " << cfg.m_r << '\n'
      << "rng_seed = " << cfg.rng_seed << '\n'
      << "angle_error_std = " << format_double(cfg.angle_error_std) << '\n';
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

} // namespace riscust
