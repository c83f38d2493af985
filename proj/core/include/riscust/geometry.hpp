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

#ifndef RISCUST_GEOMETRY_HPP
#define RISCUST_GEOMETRY_HPP

#include "riscust/config.hpp"
#include "riscust/rng.hpp"

#include <vector>

namespace riscust {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point2 &) const = default;
};

double distance(Point2 a, Point2 b);

/// Fixed site layout. The Tx sits at the origin with its ULA along the y axis;
/// the RIS ULAs are parallel to it.
struct SiteLayout {
  double ris_x = 150.0;
  Point2 rx_center{200.0, 0.0};
  double rx_radius = 50.0;
};

struct Deployment {
  Point2 tx_position;
  Point2 rx_position;
  std::vector<Point2> ris_positions;
  std::vector<int> ris_element_counts; ///< N_{S,k}
  std::vector<double> path_losses;     ///< cascaded rho_k

  /// Direction cosine of RIS k seen from the Tx (on the DFT grid).
  std::vector<double> tx_direction_cosines;

  std::size_t n_ris() const { return ris_positions.size(); }
  /// LoS AoD spatial frequency at the Tx, pi * cos(theta).
  double tx_los_aod(std::size_t k) const;
  /// LoS AoA spatial frequency at RIS k.
  double ris_los_aoa(std::size_t k) const;
  int min_element_count() const;
};

/// Cascaded free-space loss (lambda / 4 pi r1) (lambda / 4 pi r2).
/// Throws Error{InvalidArgument} for a non-positive distance or wavelength.
double path_loss(double r_tx_ris, double r_ris_rx, double wavelength);

/// round(C / rho) with halves rounded up, never below one.
int ris_element_count(double c_scale, double path_loss);

/// Direction cosines of the DFT grid 2n/N_T + offset/pi, wrapped to [-1, 1).
std::vector<double> dft_direction_cosines(int n_tx, double dft_offset);

/// The K grid directions used for RIS mounting: the non-boresight forward
/// directions with the smallest |cos|, sorted ascending. Throws
/// Error{Configuration} if fewer than K exist.
std::vector<double> ris_direction_cosines(const SystemConfig &cfg);

/// Places the RISs and an Rx drawn uniformly (by area) in the coverage disk.
Deployment place_deployment(const SystemConfig &cfg, Philox &rng,
                            const SiteLayout &layout = {});

/// Same placement with a caller-chosen Rx position.
Deployment place_deployment_at(const SystemConfig &cfg, Point2 rx_position,
                               const SiteLayout &layout = {});

} // namespace riscust

#endif // RISCUST_GEOMETRY_HPP
