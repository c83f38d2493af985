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
#include "riscust/customization.hpp"
#include "riscust/errors.hpp"
#include "riscust/geometry.hpp"
#include "riscust/rng.hpp"
#include "riscust/transceivers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace riscust;

namespace {

struct Realization {
  SystemConfig cfg;
  Deployment dep;
  ChannelSet ch;
};

Realization draw(std::uint64_t seed, const SystemConfig &cfg = {}) {
  Philox g(seed, 21);
  Realization r{cfg, place_deployment(cfg, g), {}};
  r.ch = draw_channels(cfg, r.dep, g);
  return r;
}

std::vector<CustomizedChannel> slots_for(const Realization &r, Scheme s, int m_r) {
  const auto sel = select_paths(candidate_angles(r.ch), r.cfg.n_rx, s, m_r);
  return build_slots(sel, r.ch, r.dep, refines_ris(s));
}

// a channel that is exactly R diag(xi) T^H with orthonormal R and T
CustomizedChannel ideal_slot(const std::vector<std::complex<double>> &xi, int n_rx, int n_tx) {
  CustomizedChannel c;
  const auto n = static_cast<Eigen::Index>(xi.size());
  c.r_active.resize(n_rx, n);
  c.t_active.resize(n_tx, n);
  c.xi_active.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    c.r_active.col(i) = oracle::steering(n_rx, 2.0 * std::numbers::pi * static_cast<double>(i) / n_rx);
    c.t_active.col(i) = oracle::steering(n_tx, 2.0 * std::numbers::pi * static_cast<double>(i) / n_tx);
    c.xi_active(i) = xi[static_cast<std::size_t>(i)];
  }
  c.exact_h = c.r_active * c.xi_active.asDiagonal() * c.t_active.adjoint();
  return c;
}

double log2_det(const Eigen::MatrixXcd &a) { return std::log2(std::abs(a.determinant())); }

} // namespace

TEST(Sm, LogDetFromDefinition) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Realization r = draw(seed);
    const auto slots = slots_for(r, Scheme::SM, 1);
    const auto &c = slots.front();
    const int n = r.cfg.n_rx;
    const Eigen::MatrixXcd f = std::sqrt(r.cfg.transmit_power / n) * c.t_active;
    EXPECT_NEAR(f.squaredNorm(), r.cfg.transmit_power, 1e-9 * r.cfg.transmit_power);
    const Eigen::MatrixXcd g = c.r_active.adjoint() * c.exact_h * f;
    const double want = log2_det(Eigen::MatrixXcd::Identity(n, n) + g * g.adjoint() / r.cfg.noise_power);
    const auto res = run_sm(c, r.cfg);
    EXPECT_NEAR(res.se_bits_per_hz, want, 1e-9 * want);
    EXPECT_GT(res.se_bits_per_hz, 0.0);
    ASSERT_EQ(res.post_combine_snr.size(), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(res.post_combine_snr[static_cast<std::size_t>(i)],
                  std::norm(c.xi_active(i)) * r.cfg.transmit_power / (n * r.cfg.noise_power),
                  1e-12 * res.post_combine_snr[static_cast<std::size_t>(i)]);
    }
  }
}

TEST(Sm, NoiseLimit) {
  Realization r = draw(1);
  const auto slots = slots_for(r, Scheme::SM, 1);
  r.cfg.noise_power = 1e10;
  EXPECT_LT(run_sm(slots.front(), r.cfg).se_bits_per_hz, 1e-15);
}

TEST(Sm, MonotoneInPower) {
  Realization r = draw(2);
  for (Scheme s : {Scheme::SM, Scheme::BF, Scheme::DS, Scheme::DB}) {
    const auto slots = slots_for(r, s, 2);
    double last = -1.0;
    for (double dbm : {-10.0, 0.0, 10.0, 20.0, 30.0, 40.0}) {
      r.cfg.transmit_power = dbm_to_watts(dbm);
      const double se = run_scheme(s, slots, r.cfg).se_bits_per_hz;
      EXPECT_GE(se, 0.0);
      EXPECT_GT(se, last);
      last = se;
    }
  }
}

TEST(Bf, MrcFromDefinition) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Realization r = draw(100 + seed);
    const auto c = slots_for(r, Scheme::BF, 1).front();
    const auto k = static_cast<double>(c.t_active.cols());
    const Eigen::VectorXcd f = std::sqrt(r.cfg.transmit_power / k) * c.t_active * Eigen::VectorXcd::Ones(c.t_active.cols());
    EXPECT_NEAR(f.squaredNorm(), r.cfg.transmit_power, 1e-9 * r.cfg.transmit_power);
    const double want = std::log2(1.0 + (c.exact_h * f).squaredNorm() / r.cfg.noise_power);
    EXPECT_NEAR(run_bf(c, r.cfg).se_bits_per_hz, want, 1e-12 * want);
  }
}

TEST(Bf, SingleRisHasNoCrossTerms) {
  SystemConfig cfg;
  cfg.n_rx = 1;
  cfg.n_ris = 1;
  const Realization r = draw(3, cfg);
  const auto c = slots_for(r, Scheme::BF, 1).front();
  const Eigen::VectorXcd f = std::sqrt(cfg.transmit_power) * c.t_active.col(0);
  const double want = std::log2(1.0 + (c.exact_h * f).squaredNorm() / cfg.noise_power);
  const auto res = run_bf(c, cfg);
  EXPECT_NEAR(res.se_bits_per_hz, want, 1e-12 * want);
  EXPECT_NEAR(res.post_combine_snr[0], std::norm(c.xi_active(0)) * cfg.transmit_power / cfg.noise_power,
              1e-12 * res.post_combine_snr[0]);
}

TEST(Bf, RefinementAddsCoherentGain) {
  double on = 0.0;
  double off = 0.0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Realization r = draw(1000 + seed);
    const auto sel = select_paths(candidate_angles(r.ch), r.cfg.n_rx, Scheme::BF, 1);
    const auto a = build_customized_channel(sel, r.ch, r.dep, true);
    const auto b = build_customized_channel(sel, r.ch, r.dep, false);
    const Eigen::VectorXcd f = a.t_active * Eigen::VectorXcd::Ones(a.t_active.cols());
    on += (a.exact_h * f).squaredNorm();
    off += (b.exact_h * f).squaredNorm();
  }
  EXPECT_GT(on, off);
}

TEST(Reductions, SingleSlotDiversityIsBitIdentical) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Realization r = draw(200 + seed);
    const auto sm = run_scheme(Scheme::SM, slots_for(r, Scheme::SM, 1), r.cfg);
    const auto ds = run_scheme(Scheme::DS, slots_for(r, Scheme::DS, 1), r.cfg);
    EXPECT_EQ(sm.se_bits_per_hz, ds.se_bits_per_hz);
    EXPECT_EQ(sm.post_combine_snr, ds.post_combine_snr);
    EXPECT_EQ(sm.outage, ds.outage);
    const auto bf = run_scheme(Scheme::BF, slots_for(r, Scheme::BF, 1), r.cfg);
    const auto db = run_scheme(Scheme::DB, slots_for(r, Scheme::DB, 1), r.cfg);
    EXPECT_EQ(bf.se_bits_per_hz, db.se_bits_per_hz);
    EXPECT_EQ(bf.post_combine_snr, db.post_combine_snr);
  }
}

TEST(Ds, SignalQuadraticNoiseLinear) {
  SystemConfig cfg;
  const std::vector<std::complex<double>> xi{{1e-5, 2e-5}, {-3e-5, 0.0}, {0.0, 1e-5}, {2e-5, 2e-5}};
  const CustomizedChannel one = ideal_slot(xi, cfg.n_rx, cfg.n_tx);
  const auto base = run_ds({one}, cfg);
  for (int m = 2; m <= 4; ++m) {
    const auto res = run_ds(std::vector<CustomizedChannel>(static_cast<std::size_t>(m), one), cfg);
    for (std::size_t i = 0; i < xi.size(); ++i) {
      // m^2 signal over m noise
      EXPECT_NEAR(res.post_combine_snr[i], m * base.post_combine_snr[i], 1e-9 * m * base.post_combine_snr[i]);
    }
    // on an ideal channel the log-det collapses to the per-stream sum
    double want = 0.0;
    for (double s : res.post_combine_snr) want += std::log2(1.0 + s);
    EXPECT_NEAR(res.se_bits_per_hz, want / m, 1e-9 * want);
  }
}

TEST(Ds, CombinerRotationAddsSlotsCoherently) {
  SystemConfig cfg;
  const std::vector<std::complex<double>> a{{1e-5, 0.0}, {2e-5, 0.0}, {1e-5, 1e-5}, {0.0, -1e-5}};
  std::vector<std::complex<double>> b;
  for (std::size_t i = 0; i < a.size(); ++i) b.push_back(std::polar(std::abs(a[i]) * 0.5, 0.3 + i));
  const auto res = run_ds({ideal_slot(a, cfg.n_rx, cfg.n_tx), ideal_slot(b, cfg.n_rx, cfg.n_tx)}, cfg);
  double want = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double amp = std::abs(a[i]) + std::abs(b[i]);
    want += std::log2(1.0 + amp * amp * cfg.transmit_power / (4.0 * 2.0 * cfg.noise_power));
  }
  EXPECT_NEAR(res.se_bits_per_hz, want / 2.0, 1e-9 * want);
}

TEST(Ds, SlotMismatchThrows) {
  SystemConfig cfg;
  const auto a = ideal_slot({{1e-5, 0.0}, {1e-5, 0.0}}, 4, 16);
  const auto b = ideal_slot({{1e-5, 0.0}, {1e-5, 0.0}, {1e-5, 0.0}}, 4, 16);
  EXPECT_THROW(run_ds({a, b}, cfg), Error);
  EXPECT_THROW(run_db({}, cfg), Error);
}

TEST(Ds, HighPowerCostAndLowPowerGainWithReconfiguration) {
  // sign check of the SE change from M_R = 1 to M_R = 2 at 0 dBm and 40 dBm
  double low1 = 0.0, low2 = 0.0, high1 = 0.0, high2 = 0.0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Realization r = draw(3000 + seed);
    const auto s1 = slots_for(r, Scheme::DS, 1);
    const auto s2 = slots_for(r, Scheme::DS, 2);
    r.cfg.transmit_power = dbm_to_watts(0.0);
    low1 += run_ds(s1, r.cfg).se_bits_per_hz;
    low2 += run_ds(s2, r.cfg).se_bits_per_hz;
    r.cfg.transmit_power = dbm_to_watts(40.0);
    high1 += run_ds(s1, r.cfg).se_bits_per_hz;
    high2 += run_ds(s2, r.cfg).se_bits_per_hz;
  }
  EXPECT_LT(high2, high1);
  EXPECT_GT(low2 / low1, high2 / high1);
  EXPECT_GT(low2, low1) << "low-power gain from reconfiguration";
}

TEST(Ds, LowPowerRatioFollowsAmplitudeStatistics) {
  // at low SNR, (1/M^2) E(sum_m |xi_m|)^2 / E|xi|^2 = (1 + (M - 1) pi / 4) / M for Rayleigh amplitudes
  double r1 = 0.0;
  double r2 = 0.0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    Realization r = draw(5000 + seed);
    r.cfg.transmit_power = dbm_to_watts(-30.0);
    r1 += run_ds(slots_for(r, Scheme::DS, 1), r.cfg).se_bits_per_hz;
    r2 += run_ds(slots_for(r, Scheme::DS, 2), r.cfg).se_bits_per_hz;
  }
  EXPECT_NEAR(r2 / r1, (1.0 + std::numbers::pi / 4.0) / 2.0, 0.03);
}

TEST(Db, NeverAboveBf) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Realization r = draw(400 + seed);
    const auto slots = slots_for(r, Scheme::DB, 3);
    const double bf = run_bf(slots.front(), r.cfg).se_bits_per_hz;
    const double db2 = run_db({slots[0], slots[1]}, r.cfg).se_bits_per_hz;
    const double db3 = run_db(slots, r.cfg).se_bits_per_hz;
    const auto x = [&](const std::vector<CustomizedChannel> &s) {
      double e = 0.0;
      for (const auto &c : s) {
        const auto k = c.t_active.cols();
        const Eigen::VectorXcd f = std::sqrt(r.cfg.transmit_power / static_cast<double>(k)) *
                                   s.front().t_active * Eigen::VectorXcd::Ones(k);
        e += (c.exact_h * f).squaredNorm();
      }
      return e / r.cfg.noise_power;
    };
    EXPECT_NEAR(db2, std::log2(1.0 + x({slots[0], slots[1]})) / 2.0, 1e-12 * db2);
    EXPECT_NEAR(db3, std::log2(1.0 + x(slots)) / 3.0, 1e-12 * db3);
    EXPECT_GT(bf, 0.0);
  }
}

TEST(Db, GapToBfGrowsWithReconfigurations) {
  double bf = 0.0;
  std::vector<double> db(4, 0.0);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Realization r = draw(7000 + seed);
    const auto slots = slots_for(r, Scheme::DB, 4);
    bf += run_bf(slots.front(), r.cfg).se_bits_per_hz;
    for (int m = 1; m <= 4; ++m) {
      db[static_cast<std::size_t>(m - 1)] +=
          run_db(std::vector<CustomizedChannel>(slots.begin(), slots.begin() + m), r.cfg).se_bits_per_hz;
    }
  }
  EXPECT_EQ(db[0], bf);
  for (int m = 1; m < 4; ++m) EXPECT_LT(db[static_cast<std::size_t>(m)], db[static_cast<std::size_t>(m - 1)]);
}

TEST(Outage, ThresholdSemantics) {
  const Realization r = draw(9);
  const auto slots = slots_for(r, Scheme::SM, 1);
  const auto never = run_sm(slots.front(), r.cfg, 0.0);
  EXPECT_FALSE(never.outage);
  const auto always = run_sm(slots.front(), r.cfg, 1e300);
  EXPECT_TRUE(always.outage);
  const auto at = run_sm(slots.front(), r.cfg, always.min_snr());
  EXPECT_FALSE(at.outage);
}

TEST(Qpsk, GrayMapping) {
  for (int b = 0; b < 4; ++b) {
    const auto s = qpsk_modulate(b & 1, b >> 1);
    EXPECT_NEAR(std::norm(s), 1.0, 1e-15);
    EXPECT_EQ(qpsk_demodulate(s), b);
  }
  // neighbours differ in one bit
  EXPECT_EQ(qpsk_demodulate({0.1, 0.1}) ^ qpsk_demodulate({-0.1, 0.1}), 1);
  EXPECT_EQ(qpsk_demodulate({0.1, 0.1}) ^ qpsk_demodulate({0.1, -0.1}), 2);
}

TEST(BerTrial, NoiselessIsErrorFree) {
  for (Scheme s : {Scheme::SM, Scheme::BF, Scheme::DS, Scheme::DB}) {
    Realization r = draw(11);
    const auto slots = slots_for(r, s, 2);
    r.cfg.noise_power = 0.0;
    Philox g(1, 1);
    // strong interference can still flip SM decisions; use the ideal part for streams
    if (s == Scheme::SM || s == Scheme::DS) {
      std::vector<CustomizedChannel> ideal;
      for (const auto &c : slots) {
        std::vector<std::complex<double>> xi(c.xi_active.data(), c.xi_active.data() + c.xi_active.size());
        ideal.push_back(ideal_slot(xi, r.cfg.n_rx, r.cfg.n_tx));
      }
      const auto res = ber_trial(s, ideal, r.cfg, 1000, g);
      EXPECT_EQ(res.bit_errors, 0u);
      EXPECT_EQ(res.bits_sent, 1000u * 2u * 4u);
    } else {
      const auto res = ber_trial(s, slots, r.cfg, 1000, g);
      EXPECT_EQ(res.bit_errors, 0u);
      EXPECT_EQ(res.bits_sent, 2000u);
    }
  }
}

TEST(BerTrial, Deterministic) {
  const Realization r = draw(12);
  const auto slots = slots_for(r, Scheme::DS, 2);
  Philox a(5, 5);
  Philox b(5, 5);
  const auto x = ber_trial(Scheme::DS, slots, r.cfg, 500, a);
  const auto y = ber_trial(Scheme::DS, slots, r.cfg, 500, b);
  EXPECT_EQ(x.bit_errors, y.bit_errors);
  EXPECT_THROW(ber_trial(Scheme::SM, slots, r.cfg, 0, a), Error);
}

TEST(BerTrial, MatchesQpskTheoryOnIdealChannel) {
  // BF on one real scalar path: BER = Q(sqrt(snr)) per bit with snr = |h|^2 E / sigma^2 / 1
  SystemConfig cfg;
  cfg.n_rx = 1;
  cfg.n_tx = 1;
  cfg.noise_power = 1.0;
  cfg.transmit_power = 4.0;
  const CustomizedChannel c = ideal_slot({{1.0, 0.0}}, 1, 1);
  Philox g(8, 8);
  const auto res = ber_trial(Scheme::BF, {c}, cfg, 200000, g);
  const double snr = 4.0; // per symbol; per bit amplitude sqrt(snr/2) against noise sqrt(1/2)
  const double want = 0.5 * std::erfc(std::sqrt(snr / 2.0));
  const double p = static_cast<double>(res.bit_errors) / static_cast<double>(res.bits_sent);
  EXPECT_NEAR(p, want, 5.0 * std::sqrt(want / static_cast<double>(res.bits_sent)));
}
