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

#include "oracles.hpp"

#include "riscust/channel.hpp"
#include "riscust/errors.hpp"
#include "riscust/geometry.hpp"
#include "riscust/ris.hpp"
#include "riscust/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace riscust;

namespace {

constexpr double kPi = std::numbers::pi;

// a_S^H(y_out) diag(gamma) a_S(y_in) summed term by term
std::complex<double> explicit_inner(const RisConfiguration &ris, double y_out, double y_in) {
  const int n = ris.n_elements();
  const Eigen::VectorXcd g = ris.gamma_diagonal();
  return oracle::steering(n, y_out).dot(g.cwiseProduct(oracle::steering(n, y_in)));
}

} // namespace

TEST(Ris, AlignmentOfEqualAnglesIsFlat) {
  const auto r = align_phases(0.4, 0.4, 64);
  EXPECT_TRUE(r.phases.isZero(0.0));
  EXPECT_TRUE(r.linear_slope.has_value());
}

TEST(Ris, AlignedInnerProductIsOne) {
  Philox g(1, 0);
  for (int t = 0; t < 100; ++t) {
    const double d = kPi * (2.0 * g.uniform() - 1.0);
    const double a = kPi * (2.0 * g.uniform() - 1.0);
    const auto r = align_phases(d, a, 211);
    EXPECT_NEAR(std::abs(ris_inner_product(r, d, a)), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(explicit_inner(r, d, a)), 1.0, 1e-12);
    // unit modulus everywhere
    EXPECT_TRUE(r.gamma_diagonal().cwiseAbs().isOnes(1e-14));
  }
}

TEST(Ris, ClosedFormMatchesExplicitSum) {
  Philox g(2, 0);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(g.uniform() * 250);
    auto r = align_phases(kPi * (2 * g.uniform() - 1), kPi * (2 * g.uniform() - 1), n);
    r.common_phase = 2 * kPi * g.uniform();
    const double yo = kPi * (2 * g.uniform() - 1);
    const double yi = kPi * (2 * g.uniform() - 1);
    EXPECT_NEAR(std::abs(ris_inner_product(r, yo, yi) - explicit_inner(r, yo, yi)), 0.0, 1e-12);
    Eigen::VectorXd ph(n);
    for (int i = 0; i < n; ++i) ph(i) = 2 * kPi * g.uniform();
    const auto c = custom_configuration(0, ph);
    EXPECT_NEAR(std::abs(ris_inner_product(c, yo, yi) - explicit_inner(c, yo, yi)), 0.0, 1e-12);
  }
}

TEST(Ris, DirichletMagnitude) {
  for (int n : {1, 2, 5, 174, 211}) {
    for (double d : {1e-3, 0.05, 0.2, 1.0, 3.0, -2.5}) {
      const double want = std::abs(std::sin(n * d / 2.0) / (n * std::sin(d / 2.0)));
      EXPECT_NEAR(std::abs(dirichlet_sum(n, d)), want, 1e-12);
    }
    EXPECT_EQ(dirichlet_sum(n, 2 * kPi), std::complex<double>(1.0, 0.0));
  }
}

TEST(Ris, NonAlignedPairIsBoundedByKernel) {
  const SystemConfig cfg;
  const Deployment dep = place_deployment_at(cfg, {200.0, 0.0});
  Philox g(3, 0);
  const ChannelSet set = draw_channels(cfg, dep, g);
  for (std::size_t k = 0; k < dep.n_ris(); ++k) {
    const int n = dep.ris_element_counts[k];
    const auto &tx = set.tx_ris[k];
    const auto &rx = set.ris_rx[k];
    std::vector<RisConfiguration> gammas;
    for (std::size_t i = 0; i < dep.n_ris(); ++i) {
      gammas.push_back(i == k ? align_phases(rx.paths[0].aod, tx.paths[0].aoa, n)
                              : inactive_configuration(static_cast<int>(i), dep.ris_element_counts[i]));
    }
    const auto d = cascaded_decomposition(set.tx_ris, gammas, set.ris_rx, dep);
    const int ki = static_cast<int>(k);
    const double rho = dep.path_losses[k];
    EXPECT_NEAR(std::abs(effective_gain(d, ki, 0, 0)),
                rho * std::abs(rx.paths[0].gain * tx.paths[0].gain), 1e-12 * rho * std::abs(rx.paths[0].gain * tx.paths[0].gain));
    for (int m = 1; m < d.l_t_paths; ++m) {
      const double delta = tx.paths[static_cast<std::size_t>(m)].aoa - tx.paths[0].aoa;
      const double bound = rho * std::abs(rx.paths[0].gain * tx.paths[static_cast<std::size_t>(m)].gain) *
                           std::abs(std::sin(n * delta / 2) / (n * std::sin(delta / 2)));
      EXPECT_LE(std::abs(effective_gain(d, ki, 0, m)), bound * (1 + 1e-9));
    }
  }
}

TEST(Ris, IdentityLeakageSmallAtSeparation) {
  const SystemConfig cfg;
  const Deployment dep = place_deployment_at(cfg, {200.0, 0.0});
  Philox g(4, 0);
  for (int t = 0; t < 50; ++t) {
    const ChannelSet set = draw_channels(cfg, dep, g);
    // distinct arrival angles at RIS 0 under identity: path j -> departure of path 0
    const int n = dep.ris_element_counts[0];
    const auto id = inactive_configuration(0, n);
    const auto &tx = set.tx_ris[0].paths;
    for (std::size_t a = 0; a < tx.size(); ++a) {
      for (std::size_t b = a + 1; b < tx.size(); ++b) {
        // departure aligned with another arrival: only the Dirichlet residual remains
        EXPECT_LT(std::abs(ris_inner_product(id, tx[a].aoa, tx[b].aoa)), 0.25);
      }
    }
  }
}

TEST(Ris, CommonPhaseLeavesMagnitude) {
  auto r = align_phases(0.3, -1.1, 100);
  const double before = std::abs(ris_inner_product(r, 0.9, 0.2));
  r.common_phase = 1.234;
  EXPECT_NEAR(std::abs(ris_inner_product(r, 0.9, 0.2)), before, 1e-14);
}

TEST(Ris, RefinementBasics) {
  EXPECT_DOUBLE_EQ(common_phase_refinement({2.0, 0.0}, {0.5, 0.0}, 0.0, 4), 0.0);
  EXPECT_THROW(common_phase_refinement({0.0, 0.0}, {1.0, 0.0}, 0.3, 4), Error);
  try {
    common_phase_refinement({1.0, 0.0}, {0.0, 0.0}, 0.3, 4);
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndefinedPhase);
  }
}

TEST(Ris, RefinedCrossTermsAreReal) {
  // K paths arriving at the Rx; after refinement every cross term is real
  Philox g(5, 0);
  const int n_rx = 4;
  for (int t = 0; t < 100; ++t) {
    const int k = 4;
    std::vector<std::complex<double>> xi;
    std::vector<double> phi;
    const double base = kPi * (2 * g.uniform() - 1);
    for (int i = 0; i < k; ++i) {
      const auto ar = g.complex_normal();
      const auto at = g.complex_normal();
      const double p = t % 2 == 0 ? base : kPi * (2 * g.uniform() - 1);
      const double c = common_phase_refinement(ar, at, p, n_rx);
      xi.push_back(ar * at * std::polar(1.0, c));
      phi.push_back(p);
    }
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        const auto term = std::conj(xi[static_cast<std::size_t>(a)]) * xi[static_cast<std::size_t>(b)] *
                          oracle::steering(n_rx, phi[static_cast<std::size_t>(a)])
                              .dot(oracle::steering(n_rx, phi[static_cast<std::size_t>(b)]));
        EXPECT_LT(std::abs(term.imag()), 1e-9 * std::abs(term) + 1e-15);
        if (t % 2 == 0) {
          EXPECT_GT(term.real(), 0.0);
          EXPECT_LT(std::abs(term.imag()) / term.real(), 1e-6);
        }
      }
    }
  }
}

TEST(Ris, LeakageVanishesWhenEverythingActive) {
  const SystemConfig cfg;
  const Deployment dep = place_deployment_at(cfg, {200.0, 0.0});
  Philox g(6, 0);
  const ChannelSet set = draw_channels(cfg, dep, g);
  std::vector<RisConfiguration> gammas;
  for (std::size_t k = 0; k < dep.n_ris(); ++k) {
    gammas.push_back(inactive_configuration(static_cast<int>(k), dep.ris_element_counts[k]));
  }
  const auto d = cascaded_decomposition(set.tx_ris, gammas, set.ris_rx, dep);
  std::vector<PathIndex> all;
  for (int k = 0; k < d.n_ris; ++k) {
    for (int l = 0; l < d.l_r; ++l) {
      for (int j = 0; j < d.l_t_paths; ++j) all.push_back({k, l, j});
    }
  }
  EXPECT_NEAR(leakage_norm(d, all), 0.0, 1e-25);
  EXPECT_NEAR(leakage_norm(d, {}), d.composite().norm(), 1e-12 * d.composite().norm());
  EXPECT_THROW(leakage_norm(d, {{9, 0, 0}}), Error);
}
