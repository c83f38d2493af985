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

#ifndef RISCUST_CHANNEL_HPP
#define RISCUST_CHANNEL_HPP

#include "riscust/config.hpp"
#include "riscust/geometry.hpp"
#include "riscust/ris.hpp"
#include "riscust/rng.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace riscust {

/// Unit-norm ULA response, entry i = exp(j i y) / sqrt(n).
Eigen::VectorXcd array_response(int n_elements, double spatial_freq);

struct PathComponent {
  std::complex<double> gain;
  double aoa = 0.0; ///< spatial frequency at the receiving array
  double aod = 0.0; ///< spatial frequency at the transmitting array
};

enum class LinkKind { TxToRis, RisToRx };

/// One Tx-RIS or RIS-Rx subchannel as a sum of paths.
/// Tx-RIS: rows = N_S, cols = N_T, path 0 is the LoS path.
/// RIS-Rx: rows = N_R, cols = N_S.
struct MultipathChannel {
  int rows = 0;
  int cols = 0;
  std::vector<PathComponent> paths;
  LinkKind kind = LinkKind::TxToRis;
  int ris_index = 0;

  /// sum_l gain_l a_rows(aoa_l) a_cols(aod_l)^H
  Eigen::MatrixXcd matrix() const;
};

/// Both subchannels of every RIS for one realization.
struct ChannelSet {
  std::vector<MultipathChannel> tx_ris;
  std::vector<MultipathChannel> ris_rx;

  std::size_t n_ris() const { return tx_ris.size(); }
};

/// Minimum circular spacing enforced between the spatial frequencies of a set
/// of set_size paths meeting at an RIS.
double min_path_separation(int min_elements, int set_size);

MultipathChannel draw_tx_ris_channel(const SystemConfig &cfg, const Deployment &dep,
                                     std::size_t k, Philox &rng);
MultipathChannel draw_ris_rx_channel(const SystemConfig &cfg, const Deployment &dep,
                                     std::size_t k, Philox &rng);

/// All K subchannel pairs; draws RIS by RIS (Tx-RIS then RIS-Rx).
ChannelSet draw_channels(const SystemConfig &cfg, const Deployment &dep, Philox &rng);

/// Redraws the small-scale fading, keeping every angle.
void redraw_fading(MultipathChannel &channel, const SystemConfig &cfg, Philox &rng);
void redraw_fading(ChannelSet &channels, const SystemConfig &cfg, Philox &rng);

/// H = sum_k rho_k H_{k,R} Gamma_k H_{T,k}, by direct matrix products.
Eigen::MatrixXcd assemble_composite(const std::vector<MultipathChannel> &tx_ris,
                                    const std::vector<RisConfiguration> &gammas,
                                    const std::vector<MultipathChannel> &ris_rx,
                                    const Deployment &dep);

/// H = R Xi T^H with Xi block diagonal. Row k*L_R + l of Xi belongs to the
/// RIS-Rx path (k, l), column k*(L_T+1) + j to the Tx-RIS path (k, j).
struct CascadedDecomposition {
  Eigen::MatrixXcd r_matrix;
  Eigen::MatrixXcd t_matrix;
  Eigen::MatrixXcd xi;
  int n_ris = 0;
  int l_r = 0;
  int l_t_paths = 0; ///< L_T + 1

  int row_of(int k, int l) const { return k * l_r + l; }
  int col_of(int k, int j) const { return k * l_t_paths + j; }
  PathIndex provenance(int row, int col) const;

  std::complex<double> gain(int k, int l, int j) const;
  Eigen::MatrixXcd composite() const;
};

/// xi_{k,l,j} = rho_k alpha_R alpha_T a_S^H(Phi^D_l) Gamma_k a_S(Theta^A_j).
std::complex<double> cascaded_gain(double rho, const MultipathChannel &tx_ris,
                                   const RisConfiguration &gamma,
                                   const MultipathChannel &ris_rx, int l, int j);

CascadedDecomposition cascaded_decomposition(const std::vector<MultipathChannel> &tx_ris,
                                             const std::vector<RisConfiguration> &gammas,
                                             const std::vector<MultipathChannel> &ris_rx,
                                             const Deployment &dep);

} // namespace riscust

#endif // RISCUST_CHANNEL_HPP
