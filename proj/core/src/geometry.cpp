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

#include "riscust/geometry.hpp"

#include "riscust/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace riscust {

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double Deployment::tx_los_aod(std::size_t k) const {
  return std::numbers::pi * tx_direction_cosines.at(k);
}

double Deployment::ris_los_aoa(std::size_t k) const {
  // Direction back towards the Tx, measured on the RIS array axis (y).
  const Point2 ris = ris_positions.at(k);
  return std::numbers::pi * (tx_position.y - ris.y) / distance(tx_position, ris);
}

int Deployment::min_element_count() const {
  return *std::min_element(ris_element_counts.begin(), ris_element_counts.end());
}

double path_loss(double r_tx_ris, double r_ris_rx, double wavelength) {
  if (!(r_tx_ris > 0.0) || !(r_ris_rx > 0.0)) {
    fail(ErrorKind::InvalidArgument, "path_loss: distances must be positive");
  }
  if (!(wavelength > 0.0)) fail(ErrorKind::InvalidArgument, "path_loss: wavelength must be positive");
  const double four_pi = 4.0 * std::numbers::pi;
  return (wavelength / (four_pi * r_tx_ris)) * (wavelength / (four_pi * r_ris_rx));
}

int ris_element_count(double c_scale, double path_loss) {
  if (!(c_scale > 0.0) || !(path_loss > 0.0)) {
    fail(ErrorKind::InvalidArgument, "ris_element_count: inputs must be positive");
  }
  const double n = std::floor(c_scale / path_loss + 0.5);
  return std::max(1, static_cast<int>(n));
}

std::vector<double> dft_direction_cosines(int n_tx, double dft_offset) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_tx));
  for (int n = 1; n <= n_tx; ++n) {
    double u = 2.0 * n / n_tx + dft_offset / std::numbers::pi;
    u = std::fmod(u + 1.0, 2.0);
    if (u < 0.0) u += 2.0;
    out.push_back(u - 1.0);
  }
  return out;
}

std::vector<double> ris_direction_cosines(const SystemConfig &cfg) {
  constexpr double kTol = 1e-12;
  std::vector<double> candidates;
  for (double u : dft_direction_cosines(cfg.n_tx, cfg.dft_offset)) {
    // |u| = 1 points along the array axis (no forward placement); u = 0 is
    // boresight, which the symmetric mounting leaves empty.
    if (std::abs(u) < 1.0 - kTol && std::abs(u) > kTol) candidates.push_back(u);
  }
  if (candidates.size() < static_cast<std::size_t>(cfg.n_ris)) {
    fail(ErrorKind::Configuration, "not enough forward DFT directions for " +
                                       std::to_string(cfg.n_ris) + " RISs");
  }
  std::sort(candidates.begin(), candidates.end(), [](double a, double b) {
    if (std::abs(std::abs(a) - std::abs(b)) > kTol) return std::abs(a) < std::abs(b);
    return a < b;
  });
  candidates.resize(static_cast<std::size_t>(cfg.n_ris));
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

Deployment place_deployment_at(const SystemConfig &cfg, Point2 rx_position,
                               const SiteLayout &layout) {
  Deployment dep;
  dep.tx_position = {0.0, 0.0};
  dep.rx_position = rx_position;
  dep.tx_direction_cosines = ris_direction_cosines(cfg);
  const double lambda = cfg.wavelength();
  for (double u : dep.tx_direction_cosines) {
    const double y = layout.ris_x * u / std::sqrt(1.0 - u * u);
    const Point2 ris{layout.ris_x, y};
    const double rho = path_loss(distance(dep.tx_position, ris), distance(ris, rx_position), lambda);
    dep.ris_positions.push_back(ris);
    dep.path_losses.push_back(rho);
    dep.ris_element_counts.push_back(ris_element_count(cfg.c_scale, rho));
  }
  return dep;
}

Deployment place_deployment(const SystemConfig &cfg, Philox &rng, const SiteLayout &layout) {
  const double r = layout.rx_radius * std::sqrt(rng.uniform());
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const Point2 rx{layout.rx_center.x + r * std::cos(phi), layout.rx_center.y + r * std::sin(phi)};
  return place_deployment_at(cfg, rx, layout);
}

} // namespace riscust
