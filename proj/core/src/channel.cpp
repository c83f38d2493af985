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

#include "riscust/channel.hpp"

#include "riscust/errors.hpp"

#include <cmath>
#include <numbers>

namespace riscust {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRejections = 100000;

double circular_distance(double a, double b) { return std::abs(std::remainder(a - b, 2.0 * kPi)); }

double random_spatial_freq(Philox &rng) { return kPi * std::cos(kPi * rng.uniform()); }

// Draws a spatial frequency at least `sep` away from every entry of taken.
double draw_separated(Philox &rng, const std::vector<double> &taken, double sep) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    const double y = random_spatial_freq(rng);
    bool ok = true;
    for (double t : taken) {
      if (circular_distance(y, t) < sep) {
        ok = false;
        break;
      }
    }
    if (ok) return y;
  }
  fail(ErrorKind::Domain, "could not place a path with the required angular separation");
}

int checked_index(const Deployment &dep, std::size_t k) {
  if (k >= dep.n_ris()) fail(ErrorKind::IndexOutOfRange, "RIS index out of range");
  return static_cast<int>(k);
}

} // namespace

Eigen::VectorXcd array_response(int n_elements, double spatial_freq) {
  if (n_elements < 1) fail(ErrorKind::InvalidArgument, "array_response: n_elements must be >= 1");
  Eigen::VectorXcd a(n_elements);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_elements));
  for (int i = 0; i < n_elements; ++i) a(i) = std::polar(scale, i * spatial_freq);
  return a;
}

Eigen::MatrixXcd MultipathChannel::matrix() const {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(rows, cols);
  for (const auto &p : paths) {
    h.noalias() += p.gain * array_response(rows, p.aoa) * array_response(cols, p.aod).adjoint();
  }
  return h;
}

double min_path_separation(int min_elements, int set_size) {
  const double grid = 2.0 * kPi / std::max(1, min_elements);
  return std::min(grid, kPi / std::max(1, set_size));
}

MultipathChannel draw_tx_ris_channel(const SystemConfig &cfg, const Deployment &dep,
                                     std::size_t k, Philox &rng) {
  const int idx = checked_index(dep, k);
  MultipathChannel ch;
  ch.kind = LinkKind::TxToRis;
  ch.ris_index = idx;
  ch.rows = dep.ris_element_counts[k];
  ch.cols = cfg.n_tx;

  const double sep = min_path_separation(dep.min_element_count(), cfg.l_t + 1);
  std::vector<double> arrivals{dep.ris_los_aoa(k)};
  ch.paths.push_back({{}, arrivals.front(), dep.tx_los_aod(k)});
  for (int l = 0; l < cfg.l_t; ++l) {
    const double aoa = draw_separated(rng, arrivals, sep);
    arrivals.push_back(aoa);
    ch.paths.push_back({{}, aoa, random_spatial_freq(rng)});
  }
  redraw_fading(ch, cfg, rng);
  return ch;
}

MultipathChannel draw_ris_rx_channel(const SystemConfig &cfg, const Deployment &dep,
                                     std::size_t k, Philox &rng) {
  const int idx = checked_index(dep, k);
  MultipathChannel ch;
  ch.kind = LinkKind::RisToRx;
  ch.ris_index = idx;
  ch.rows = cfg.n_rx;
  ch.cols = dep.ris_element_counts[k];

  const double sep = min_path_separation(dep.min_element_count(), cfg.l_r);
  std::vector<double> departures;
  for (int l = 0; l < cfg.l_r; ++l) {
    const double aod = draw_separated(rng, departures, sep);
    departures.push_back(aod);
    ch.paths.push_back({{}, random_spatial_freq(rng), aod});
  }
  redraw_fading(ch, cfg, rng);
  return ch;
}

ChannelSet draw_channels(const SystemConfig &cfg, const Deployment &dep, Philox &rng) {
  ChannelSet set;
  for (std::size_t k = 0; k < dep.n_ris(); ++k) {
    set.tx_ris.push_back(draw_tx_ris_channel(cfg, dep, k, rng));
    set.ris_rx.push_back(draw_ris_rx_channel(cfg, dep, k, rng));
  }
  return set;
}

void redraw_fading(MultipathChannel &channel, const SystemConfig &cfg, Philox &rng) {
  const double kappa = cfg.rician_kappa;
  if (channel.kind == LinkKind::TxToRis) {
    const double n = static_cast<double>(cfg.n_tx) * channel.rows;
    channel.paths.at(0).gain = std::sqrt(kappa * n / (kappa + 1.0));
    const double nlos = std::sqrt(n / ((kappa + 1.0) * std::max(1, cfg.l_t)));
    for (std::size_t l = 1; l < channel.paths.size(); ++l) {
      channel.paths[l].gain = nlos * rng.complex_normal();
    }
  } else {
    const double scale = std::sqrt(static_cast<double>(cfg.n_rx) * channel.cols / cfg.l_r);
    for (auto &p : channel.paths) p.gain = scale * rng.complex_normal();
  }
}

void redraw_fading(ChannelSet &channels, const SystemConfig &cfg, Philox &rng) {
  for (std::size_t k = 0; k < channels.n_ris(); ++k) {
    redraw_fading(channels.tx_ris[k], cfg, rng);
    redraw_fading(channels.ris_rx[k], cfg, rng);
  }
}

namespace {

void check_dimensions(const std::vector<MultipathChannel> &tx_ris,
                      const std::vector<RisConfiguration> &gammas,
                      const std::vector<MultipathChannel> &ris_rx, const Deployment &dep) {
  const std::size_t k = dep.n_ris();
  if (tx_ris.size() != k || ris_rx.size() != k || gammas.size() != k) {
    fail(ErrorKind::DimensionMismatch, "per-RIS inputs must have one entry per RIS");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const int n_s = gammas[i].n_elements();
    if (tx_ris[i].rows != n_s || ris_rx[i].cols != n_s) {
      fail(ErrorKind::DimensionMismatch, "RIS " + std::to_string(i) + " size disagrees");
    }
    if (i > 0 && (tx_ris[i].cols != tx_ris[0].cols || ris_rx[i].rows != ris_rx[0].rows)) {
      fail(ErrorKind::DimensionMismatch, "Tx/Rx array sizes differ across RISs");
    }
    if (i > 0 && (tx_ris[i].paths.size() != tx_ris[0].paths.size() ||
                  ris_rx[i].paths.size() != ris_rx[0].paths.size())) {
      fail(ErrorKind::DimensionMismatch, "path counts differ across RISs");
    }
  }
}

} // namespace

Eigen::MatrixXcd assemble_composite(const std::vector<MultipathChannel> &tx_ris,
                                    const std::vector<RisConfiguration> &gammas,
                                    const std::vector<MultipathChannel> &ris_rx,
                                    const Deployment &dep) {
  check_dimensions(tx_ris, gammas, ris_rx, dep);
  if (tx_ris.empty()) fail(ErrorKind::DimensionMismatch, "no RIS in deployment");
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(ris_rx[0].rows, tx_ris[0].cols);
  for (std::size_t k = 0; k < tx_ris.size(); ++k) {
    const Eigen::MatrixXcd right = gammas[k].gamma_diagonal().asDiagonal() * tx_ris[k].matrix();
    h.noalias() += dep.path_losses[k] * (ris_rx[k].matrix() * right);
  }
  return h;
}

PathIndex CascadedDecomposition::provenance(int row, int col) const {
  if (row < 0 || col < 0 || row >= xi.rows() || col >= xi.cols()) {
    fail(ErrorKind::IndexOutOfRange, "decomposition entry out of range");
  }
  const int k = row / l_r;
  if (col / l_t_paths != k) fail(ErrorKind::IndexOutOfRange, "entry is outside the diagonal blocks");
  return {k, row % l_r, col % l_t_paths};
}

std::complex<double> CascadedDecomposition::gain(int k, int l, int j) const {
  if (k < 0 || k >= n_ris || l < 0 || l >= l_r || j < 0 || j >= l_t_paths) {
    fail(ErrorKind::IndexOutOfRange, "cascaded path index out of range");
  }
  return xi(row_of(k, l), col_of(k, j));
}

Eigen::MatrixXcd CascadedDecomposition::composite() const {
  return r_matrix * (xi * t_matrix.adjoint());
}

std::complex<double> cascaded_gain(double rho, const MultipathChannel &tx_ris,
                                   const RisConfiguration &gamma,
                                   const MultipathChannel &ris_rx, int l, int j) {
  const PathComponent &rx_path = ris_rx.paths.at(static_cast<std::size_t>(l));
  const PathComponent &tx_path = tx_ris.paths.at(static_cast<std::size_t>(j));
  return rho * rx_path.gain * tx_path.gain * ris_inner_product(gamma, rx_path.aod, tx_path.aoa);
}

CascadedDecomposition cascaded_decomposition(const std::vector<MultipathChannel> &tx_ris,
                                             const std::vector<RisConfiguration> &gammas,
                                             const std::vector<MultipathChannel> &ris_rx,
                                             const Deployment &dep) {
  check_dimensions(tx_ris, gammas, ris_rx, dep);
  if (tx_ris.empty()) fail(ErrorKind::DimensionMismatch, "no RIS in deployment");
  CascadedDecomposition d;
  d.n_ris = static_cast<int>(tx_ris.size());
  d.l_r = static_cast<int>(ris_rx[0].paths.size());
  d.l_t_paths = static_cast<int>(tx_ris[0].paths.size());
  const int n_rx = ris_rx[0].rows;
  const int n_tx = tx_ris[0].cols;
  d.r_matrix.resize(n_rx, d.n_ris * d.l_r);
  d.t_matrix.resize(n_tx, d.n_ris * d.l_t_paths);
  d.xi = Eigen::MatrixXcd::Zero(d.n_ris * d.l_r, d.n_ris * d.l_t_paths);
  for (int k = 0; k < d.n_ris; ++k) {
    const auto &tx = tx_ris[static_cast<std::size_t>(k)];
    const auto &rx = ris_rx[static_cast<std::size_t>(k)];
    for (int l = 0; l < d.l_r; ++l) {
      d.r_matrix.col(d.row_of(k, l)) = array_response(n_rx, rx.paths[static_cast<std::size_t>(l)].aoa);
    }
    for (int j = 0; j < d.l_t_paths; ++j) {
      d.t_matrix.col(d.col_of(k, j)) = array_response(n_tx, tx.paths[static_cast<std::size_t>(j)].aod);
    }
    for (int l = 0; l < d.l_r; ++l) {
      for (int j = 0; j < d.l_t_paths; ++j) {
        d.xi(d.row_of(k, l), d.col_of(k, j)) =
            cascaded_gain(dep.path_losses[static_cast<std::size_t>(k)], tx,
                          gammas[static_cast<std::size_t>(k)], rx, l, j);
      }
    }
  }
  return d;
}

} // namespace riscust
