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

#ifndef RISCUST_CUSTOMIZATION_HPP
#define RISCUST_CUSTOMIZATION_HPP

#include "riscust/channel.hpp"
#include "riscust/geometry.hpp"
#include "riscust/ris.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace riscust {

enum class Scheme { SM, BF, DS, DB };

const char *to_string(Scheme scheme) noexcept;

/// Which RISs are active and which RIS-Rx path each one aligns in every
/// reconfiguration slot. The Tx-side path is always the LoS path (j = 0).
struct PathSelection {
  Scheme scheme = Scheme::SM;
  std::vector<int> active_ris;               ///< ascending RIS indices
  std::vector<std::vector<int>> slot_paths;  ///< [slot][i] path of active_ris[i]
  double objective_value = 0.0;              ///< slot-1 objective
  std::vector<double> slot_objectives;

  int m_r() const { return static_cast<int>(slot_paths.size()); }
  /// Path aligned by RIS k in the slot, or -1 if k is inactive.
  int path_for(int slot, int k) const;
};

struct SearchLimits {
  double max_candidates = 1e7;
};

/// ||R^H R - I||_F^2 and ||R^H R - 1||_F^2 of a response matrix.
double orthogonality_defect(const Eigen::MatrixXcd &r);
double coherence_defect(const Eigen::MatrixXcd &r);

/// K x L_R matrix of RIS-Rx arrival spatial frequencies.
Eigen::MatrixXd candidate_angles(const ChannelSet &channels);

/// Exhaustive search of RIS subsets of size n_rx and one path per selected
/// RIS minimizing the orthogonality defect. Ties go to the lexicographically
/// smallest (subset, path tuple). Throws Error{Configuration} if K < n_rx and
/// Error{SearchTooLarge} above the limit.
PathSelection select_paths_sm(const Eigen::MatrixXd &candidates, int n_rx,
                              const SearchLimits &limits = {});

/// Exhaustive search of one path per RIS (all RISs active) minimizing the
/// coherence defect.
PathSelection select_paths_bf(const Eigen::MatrixXd &candidates, int n_rx,
                              const SearchLimits &limits = {});

/// DS/DB selection: slot 1 as SM/BF, later slots greedily over the paths each
/// active RIS has not used yet. Throws Error{Infeasible} if m_r > L_R.
PathSelection select_paths_diversity(const Eigen::MatrixXd &candidates, int n_rx, Scheme scheme,
                                     int m_r, const SearchLimits &limits = {});

/// Dispatches on the scheme (SM/BF give one slot).
PathSelection select_paths(const Eigen::MatrixXd &candidates, int n_rx, Scheme scheme, int m_r,
                           const SearchLimits &limits = {});

struct CustomizedChannel {
  Eigen::MatrixXcd r_active;  ///< N_R x n_active, from the design angles
  Eigen::MatrixXcd t_active;  ///< N_T x n_active
  Eigen::VectorXcd xi_active; ///< activated gains under the designed RISs
  Eigen::MatrixXcd exact_h;   ///< full composite channel
  std::vector<RisConfiguration> gammas;
  std::vector<PathIndex> active_paths;
  int slot = 0;
};

/// Designs every RIS for one slot of the selection and evaluates the result.
/// Phases are designed from `design`; gains, refinement and the exact channel
/// come from `truth` (defaults to `design`).
CustomizedChannel build_customized_channel(const PathSelection &selection,
                                           const ChannelSet &design, const Deployment &dep,
                                           bool refine, int slot = 0,
                                           const ChannelSet *truth = nullptr);

/// One customized channel per slot.
std::vector<CustomizedChannel> build_slots(const PathSelection &selection,
                                           const ChannelSet &design, const Deployment &dep,
                                           bool refine, const ChannelSet *truth = nullptr);

/// Whether the scheme refines the RIS common phase.
bool refines_ris(Scheme scheme) noexcept;

} // namespace riscust

#endif // RISCUST_CUSTOMIZATION_HPP
