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

#include "riscust/errors.hpp"
#include "riscust/geometry.hpp"
#include "riscust/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace riscust;

TEST(PathLoss, UnitFactors) {
  const double lambda = 1.0;
  const double r = lambda / (4.0 * std::numbers::pi);
  EXPECT_NEAR(path_loss(r, r, lambda), 1.0, 1e-15);
}

TEST(PathLoss, ProductFormula) {
  // (lambda / 4 pi r1)(lambda / 4 pi r2) written out for 150 m and 50 m at 3.5 GHz
  const double lambda = 299792458.0 / 3.5e9;
  const double expected = lambda * lambda / (16.0 * std::numbers::pi * std::numbers::pi * 150.0 * 50.0);
  EXPECT_NEAR(path_loss(150.0, 50.0, lambda) / expected, 1.0, 1e-14);
  EXPECT_NEAR(path_loss(150.0, 50.0, lambda), 6.1947e-9, 1e-12);
}

TEST(PathLoss, LinearInInverseDistance) {
  const double lambda = 0.0857;
  EXPECT_NEAR(path_loss(300.0, 50.0, lambda), path_loss(150.0, 50.0, lambda) / 2.0, 1e-24);
  EXPECT_THROW(path_loss(0.0, 1.0, lambda), Error);
  EXPECT_THROW(path_loss(1.0, 1.0, -1.0), Error);
}

TEST(ElementCount, RoundingRule) {
  const double rho = 3e-9;
  EXPECT_EQ(ris_element_count(rho, rho), 1);
  EXPECT_EQ(ris_element_count(2.5 * rho, rho), 3);
  EXPECT_EQ(ris_element_count(2.4 * rho, rho), 2);
  EXPECT_EQ(ris_element_count(0.1 * rho, rho), 1);
}

TEST(DftGrid, DefaultDirections) {
  SystemConfig cfg;
  const auto grid = dft_direction_cosines(cfg.n_tx, cfg.dft_offset);
  ASSERT_EQ(grid.size(), 16u);
  for (double u : grid) {
    EXPECT_GE(u, -1.0);
    EXPECT_LT(u, 1.0);
    const double steps = (u + 1.0) * 8.0;
    EXPECT_NEAR(steps, std::round(steps), 1e-12);
  }
  const auto ris = ris_direction_cosines(cfg);
  ASSERT_EQ(ris.size(), 4u);
  EXPECT_DOUBLE_EQ(ris[0], -0.25);
  EXPECT_DOUBLE_EQ(ris[1], -0.125);
  EXPECT_DOUBLE_EQ(ris[2], 0.125);
  EXPECT_DOUBLE_EQ(ris[3], 0.25);
}

TEST(DftGrid, TooManyRis) {
  SystemConfig cfg;
  cfg.n_tx = 4;
  cfg.n_rx = 2;
  cfg.n_ris = 3; // grid {-0.5, 0, 0.5, -1}: two usable directions
  EXPECT_THROW(ris_direction_cosines(cfg), Error);
}

TEST(Deployment, ReferenceElementCountsAtDiskCentre) {
  const SystemConfig cfg;
  const Deployment dep = place_deployment_at(cfg, {200.0, 0.0});
  ASSERT_EQ(dep.n_ris(), 4u);
  EXPECT_EQ(dep.ris_element_counts, (std::vector<int>{211, 174, 174, 211}));
  for (std::size_t k = 0; k < dep.n_ris(); ++k) {
    EXPECT_DOUBLE_EQ(dep.ris_positions[k].x, 150.0);
    // the Tx sees each RIS along its DFT direction
    const double u = dep.ris_positions[k].y / distance(dep.tx_position, dep.ris_positions[k]);
    EXPECT_NEAR(u, dep.tx_direction_cosines[k], 1e-12);
    EXPECT_GT(dep.path_losses[k], 0.0);
    EXPECT_LT(dep.path_losses[k], 1.0);
    EXPECT_NEAR(dep.tx_los_aod(k), std::numbers::pi * u, 1e-12);
    EXPECT_NEAR(dep.ris_los_aoa(k), -std::numbers::pi * u, 1e-12);
  }
  EXPECT_EQ(dep.min_element_count(), 174);
}

TEST(Deployment, DistancesFromRx) {
  const SystemConfig cfg;
  const Deployment dep = place_deployment_at(cfg, {200.0, 0.0});
  const double lambda = cfg.wavelength();
  for (std::size_t k = 0; k < dep.n_ris(); ++k) {
    const auto p = dep.ris_positions[k];
    const double r1 = std::hypot(p.x, p.y);
    const double r2 = std::hypot(200.0 - p.x, p.y);
    EXPECT_NEAR(dep.path_losses[k], path_loss(r1, r2, lambda), 1e-22);
  }
}

TEST(Deployment, SeededPlacementIsDeterministicAndInsideDisk) {
  const SystemConfig cfg;
  for (std::uint64_t s = 0; s < 50; ++s) {
    Philox a(s, 1);
    Philox b(s, 1);
    const Deployment da = place_deployment(cfg, a);
    const Deployment db = place_deployment(cfg, b);
    EXPECT_EQ(da.rx_position.x, db.rx_position.x);
    EXPECT_EQ(da.rx_position.y, db.rx_position.y);
    EXPECT_EQ(da.ris_element_counts, db.ris_element_counts);
    EXPECT_LE(distance(da.rx_position, {200.0, 0.0}), 50.0);
  }
}

TEST(Deployment, RxUniformByArea) {
  const SystemConfig cfg;
  Philox g(9, 0);
  int inner = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const Deployment d = place_deployment(cfg, g);
    if (distance(d.rx_position, {200.0, 0.0}) < 25.0) ++inner;
  }
  EXPECT_NEAR(static_cast<double>(inner) / n, 0.25, 0.015);
}
