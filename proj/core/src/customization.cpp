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

#include "riscust/customization.hpp"

#include "riscust/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace riscust {

const char *to_string(Scheme scheme) noexcept {
  switch (scheme) {
  case Scheme::SM: return "sm";
  case Scheme::BF: return "bf";
  case Scheme::DS: return "ds";
  case Scheme::DB: return "db";
  }
  return "?";
}

bool refines_ris(Scheme scheme) noexcept { return scheme == Scheme::BF || scheme == Scheme::DB; }

int PathSelection::path_for(int slot, int k) const {
  const auto &paths = slot_paths.at(static_cast<std::size_t>(slot));
  for (std::size_t i = 0; i < active_ris.size(); ++i) {
    if (active_ris[i] == k) return paths[i];
  }
  return -1;
}

double orthogonality_defect(const Eigen::MatrixXcd &r) {
  const Eigen::Index n = r.cols();
  return (r.adjoint() * r - Eigen::MatrixXcd::Identity(n, n)).squaredNorm();
}

double coherence_defect(const Eigen::MatrixXcd &r) {
  const Eigen::Index n = r.cols();
  return (r.adjoint() * r - Eigen::MatrixXcd::Ones(n, n)).squaredNorm();
}

Eigen::MatrixXd candidate_angles(const ChannelSet &channels) {
  const std::size_t k = channels.n_ris();
  if (k == 0) fail(ErrorKind::DimensionMismatch, "no RIS channels");
  const std::size_t l_r = channels.ris_rx[0].paths.size();
  Eigen::MatrixXd out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l_r));
  for (std::size_t i = 0; i < k; ++i) {
    if (channels.ris_rx[i].paths.size() != l_r) fail(ErrorKind::DimensionMismatch, "path counts differ");
    for (std::size_t l = 0; l < l_r; ++l) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)) = channels.ris_rx[i].paths[l].aoa;
    }
  }
  return out;
}

namespace {

constexpr double kTieTolerance = 1e-12;

enum class Target { Orthogonal, Coherent };

// Pairwise defect weights between all K*L_R candidates (flat index k*L_R + l).
class PairTable {
public:
  PairTable(const Eigen::MatrixXd &candidates, int n_rx, Target target)
      : l_r_(static_cast<int>(candidates.cols())),
        size_(static_cast<int>(candidates.size())),
        w_(static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_)) {
    for (int a = 0; a < size_; ++a) {
      for (int b = 0; b < size_; ++b) {
        const double ya = candidates(a / l_r_, a % l_r_);
        const double yb = candidates(b / l_r_, b % l_r_);
        const std::complex<double> g = dirichlet_sum(n_rx, yb - ya);
        w_[static_cast<std::size_t>(a * size_ + b)] =
            target == Target::Orthogonal ? std::norm(g) : std::norm(g - 1.0);
      }
    }
  }

  int flat(int k, int l) const { return k * l_r_ + l; }
  double operator()(int a, int b) const { return w_[static_cast<std::size_t>(a * size_ + b)]; }

private:
  int l_r_;
  int size_;
  std::vector<double> w_;
};

struct TupleResult {
  std::vector<int> paths;
  double half_defect = std::numeric_limits<double>::infinity();
};

// Lexicographic scan over one path per RIS from the given option lists.
TupleResult best_tuple(const PairTable &table, const std::vector<int> &ris,
                       const std::vector<std::vector<int>> &options) {
  const std::size_t n = ris.size();
  TupleResult best;
  std::vector<std::size_t> idx(n, 0);
  std::vector<int> flat(n);
  for (const auto &o : options) {
    if (o.empty()) return best;
  }
  while (true) {
    for (std::size_t i = 0; i < n; ++i) flat[i] = table.flat(ris[i], options[i][idx[i]]);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) sum += table(flat[i], flat[j]);
    }
    if (sum < best.half_defect - kTieTolerance) {
      best.half_defect = sum;
      best.paths.resize(n);
      for (std::size_t i = 0; i < n; ++i) best.paths[i] = options[i][idx[i]];
    }
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < options[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return best;
    }
    if (n == 0) return best;
  }
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_limit(double count, const SearchLimits &limits) {
  if (count > limits.max_candidates) {
    fail(ErrorKind::SearchTooLarge,
         "path search would visit " + std::to_string(count) + " candidates");
  }
}

std::vector<std::vector<int>> all_paths(std::size_t n, int l_r) {
  std::vector<int> all(static_cast<std::size_t>(l_r));
  for (int l = 0; l < l_r; ++l) all[static_cast<std::size_t>(l)] = l;
  return std::vector<std::vector<int>>(n, all);
}

void check_candidates(const Eigen::MatrixXd &candidates, int n_rx) {
  if (candidates.rows() < 1 || candidates.cols() < 1) {
    fail(ErrorKind::InvalidArgument, "candidate angle matrix is empty");
  }
  if (n_rx < 1) fail(ErrorKind::InvalidArgument, "n_rx must be >= 1");
}

PathSelection select_sm_with(const PairTable &table, const Eigen::MatrixXd &candidates,
                             int n_rx, const SearchLimits &limits) {
  const int k = static_cast<int>(candidates.rows());
  const int l_r = static_cast<int>(candidates.cols());
  if (k < n_rx) fail(ErrorKind::Configuration, "SM needs at least N_R RISs");
  check_limit(binomial(k, n_rx) * std::pow(static_cast<double>(l_r), n_rx), limits);

  PathSelection sel;
  sel.scheme = Scheme::SM;
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> subset(static_cast<std::size_t>(n_rx));
  for (int i = 0; i < n_rx; ++i) subset[static_cast<std::size_t>(i)] = i;
  const auto options = all_paths(subset.size(), l_r);
  while (true) {
    TupleResult r = best_tuple(table, subset, options);
    if (r.half_defect < best - kTieTolerance) {
      best = r.half_defect;
      sel.active_ris = subset;
      sel.slot_paths = {r.paths};
    }
    int pos = n_rx - 1;
    while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == k - n_rx + pos) --pos;
    if (pos < 0) break;
    ++subset[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < n_rx; ++i) {
      subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  sel.objective_value = 2.0 * best;
  sel.slot_objectives = {sel.objective_value};
  return sel;
}

PathSelection select_bf_with(const PairTable &table, const Eigen::MatrixXd &candidates,
                             const SearchLimits &limits) {
  const int k = static_cast<int>(candidates.rows());
  const int l_r = static_cast<int>(candidates.cols());
  check_limit(std::pow(static_cast<double>(l_r), k), limits);
  PathSelection sel;
  sel.scheme = Scheme::BF;
  for (int i = 0; i < k; ++i) sel.active_ris.push_back(i);
  TupleResult r = best_tuple(table, sel.active_ris, all_paths(sel.active_ris.size(), l_r));
  sel.slot_paths = {r.paths};
  sel.objective_value = 2.0 * r.half_defect;
  sel.slot_objectives = {sel.objective_value};
  return sel;
}

} // namespace

PathSelection select_paths_sm(const Eigen::MatrixXd &candidates, int n_rx,
                              const SearchLimits &limits) {
  check_candidates(candidates, n_rx);
  const PairTable table(candidates, n_rx, Target::Orthogonal);
  return select_sm_with(table, candidates, n_rx, limits);
}

PathSelection select_paths_bf(const Eigen::MatrixXd &candidates, int n_rx,
                              const SearchLimits &limits) {
  check_candidates(candidates, n_rx);
  const PairTable table(candidates, n_rx, Target::Coherent);
  return select_bf_with(table, candidates, limits);
}

PathSelection select_paths_diversity(const Eigen::MatrixXd &candidates, int n_rx, Scheme scheme,
                                     int m_r, const SearchLimits &limits) {
  check_candidates(candidates, n_rx);
  if (scheme != Scheme::DS && scheme != Scheme::DB) {
    fail(ErrorKind::InvalidArgument, "diversity selection needs DS or DB");
  }
  const int l_r = static_cast<int>(candidates.cols());
  if (m_r < 1) fail(ErrorKind::InvalidArgument, "m_r must be >= 1");
  if (m_r > l_r) {
    fail(ErrorKind::Infeasible, "M_R = " + std::to_string(m_r) + " exceeds L_R = " +
                                    std::to_string(l_r) + " disjoint paths");
  }
  const Target target = scheme == Scheme::DS ? Target::Orthogonal : Target::Coherent;
  const PairTable table(candidates, n_rx, target);
  PathSelection sel = scheme == Scheme::DS ? select_sm_with(table, candidates, n_rx, limits)
                                           : select_bf_with(table, candidates, limits);
  sel.scheme = scheme;

  const std::size_t n = sel.active_ris.size();
  std::vector<std::vector<bool>> used(n, std::vector<bool>(static_cast<std::size_t>(l_r), false));
  for (std::size_t i = 0; i < n; ++i) used[i][static_cast<std::size_t>(sel.slot_paths[0][i])] = true;
  for (int slot = 1; slot < m_r; ++slot) {
    std::vector<std::vector<int>> options(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (int l = 0; l < l_r; ++l) {
        if (!used[i][static_cast<std::size_t>(l)]) options[i].push_back(l);
      }
    }
    TupleResult r = best_tuple(table, sel.active_ris, options);
    for (std::size_t i = 0; i < n; ++i) used[i][static_cast<std::size_t>(r.paths[i])] = true;
    sel.slot_paths.push_back(r.paths);
    sel.slot_objectives.push_back(2.0 * r.half_defect);
  }
  return sel;
}

PathSelection select_paths(const Eigen::MatrixXd &candidates, int n_rx, Scheme scheme, int m_r,
                           const SearchLimits &limits) {
  switch (scheme) {
  case Scheme::SM: return select_paths_sm(candidates, n_rx, limits);
  case Scheme::BF: return select_paths_bf(candidates, n_rx, limits);
  case Scheme::DS:
  case Scheme::DB: return select_paths_diversity(candidates, n_rx, scheme, m_r, limits);
  }
  fail(ErrorKind::InvalidArgument, "unknown scheme");
}

CustomizedChannel build_customized_channel(const PathSelection &selection,
                                           const ChannelSet &design, const Deployment &dep,
                                           bool refine, int slot, const ChannelSet *truth) {
  const ChannelSet &real = truth ? *truth : design;
  const std::size_t k_all = design.n_ris();
  if (real.n_ris() != k_all || dep.n_ris() != k_all) {
    fail(ErrorKind::DimensionMismatch, "design, truth and deployment disagree on K");
  }
  if (slot < 0 || slot >= selection.m_r()) fail(ErrorKind::IndexOutOfRange, "slot out of range");
  const auto &paths = selection.slot_paths[static_cast<std::size_t>(slot)];
  const std::size_t n_active = selection.active_ris.size();
  const int n_rx = design.ris_rx.at(0).rows;
  const int n_tx = design.tx_ris.at(0).cols;

  CustomizedChannel out;
  out.slot = slot;
  out.gammas.reserve(k_all);
  for (std::size_t k = 0; k < k_all; ++k) {
    out.gammas.push_back(inactive_configuration(static_cast<int>(k), dep.ris_element_counts[k]));
  }

  double reference = 0.0;
  out.r_active.resize(n_rx, static_cast<Eigen::Index>(n_active));
  out.t_active.resize(n_tx, static_cast<Eigen::Index>(n_active));
  out.xi_active.resize(static_cast<Eigen::Index>(n_active));
  for (std::size_t i = 0; i < n_active; ++i) {
    const auto k = static_cast<std::size_t>(selection.active_ris[i]);
    const int l = paths[i];
    const PathComponent &rx_path = design.ris_rx.at(k).paths.at(static_cast<std::size_t>(l));
    const PathComponent &tx_los = design.tx_ris.at(k).paths.at(0);
    RisConfiguration g = align_phases(rx_path.aod, tx_los.aoa, dep.ris_element_counts[k]);
    g.ris_index = static_cast<int>(k);
    g.aligned_path = AlignedPath{l, 0};
    if (refine) {
      double phi_a = rx_path.aoa;
      if (i == 0) reference = phi_a;
      phi_a = reference + std::remainder(phi_a - reference, 2.0 * std::numbers::pi);
      g.common_phase = common_phase_refinement(
          real.ris_rx[k].paths[static_cast<std::size_t>(l)].gain, real.tx_ris[k].paths[0].gain,
          phi_a, n_rx);
    }
    out.gammas[k] = std::move(g);
    out.active_paths.push_back({static_cast<int>(k), l, 0});
    out.r_active.col(static_cast<Eigen::Index>(i)) = array_response(n_rx, rx_path.aoa);
    out.t_active.col(static_cast<Eigen::Index>(i)) = array_response(n_tx, tx_los.aod);
  }

  const CascadedDecomposition decomp =
      cascaded_decomposition(real.tx_ris, out.gammas, real.ris_rx, dep);
  for (std::size_t i = 0; i < n_active; ++i) {
    const PathIndex &p = out.active_paths[i];
    out.xi_active(static_cast<Eigen::Index>(i)) = decomp.gain(p.k, p.l, p.j);
  }
  out.exact_h = decomp.composite();
  return out;
}

std::vector<CustomizedChannel> build_slots(const PathSelection &selection,
                                           const ChannelSet &design, const Deployment &dep,
                                           bool refine, const ChannelSet *truth) {
  std::vector<CustomizedChannel> slots;
  slots.reserve(static_cast<std::size_t>(selection.m_r()));
  for (int m = 0; m < selection.m_r(); ++m) {
    slots.push_back(build_customized_channel(selection, design, dep, refine, m, truth));
  }
  return slots;
}

} // namespace riscust
