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

#include "riscust/transceivers.hpp"

#include "riscust/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace riscust {

double SchemeResult::min_snr() const {
  if (post_combine_snr.empty()) return 0.0;
  return *std::min_element(post_combine_snr.begin(), post_combine_snr.end());
}

namespace {

void check_slots(const std::vector<CustomizedChannel> &slots) {
  if (slots.empty()) fail(ErrorKind::DimensionMismatch, "at least one slot is required");
  const auto &first = slots.front();
  for (const auto &s : slots) {
    if (s.t_active.cols() != first.t_active.cols() || s.r_active.rows() != first.r_active.rows() ||
        s.exact_h.rows() != first.exact_h.rows() || s.exact_h.cols() != first.exact_h.cols() ||
        s.xi_active.size() != first.xi_active.size()) {
      fail(ErrorKind::DimensionMismatch, "slots disagree in shape");
    }
  }
}

// Multi-stream transceiver shared by SM and DS.
struct StreamLink {
  Eigen::MatrixXcd precoder;                  // F, N_T x n
  std::vector<Eigen::MatrixXcd> combiners;    // W'_m, N_R x n (phase-rotated)
  std::vector<Eigen::MatrixXcd> effective;    // W'_m^H H_m F
  Eigen::MatrixXcd total;                     // sum of effective
};

StreamLink build_stream_link(const std::vector<CustomizedChannel> &slots, const SystemConfig &cfg) {
  check_slots(slots);
  StreamLink link;
  const auto n = static_cast<double>(slots.front().t_active.cols());
  link.precoder = std::sqrt(cfg.transmit_power / n) * slots.front().t_active;
  for (std::size_t m = 0; m < slots.size(); ++m) {
    Eigen::MatrixXcd w = slots[m].r_active;
    Eigen::MatrixXcd g = w.adjoint() * (slots[m].exact_h * link.precoder);
    if (m > 0) {
      const auto &reference = link.effective.front();
      for (Eigen::Index c = 0; c < g.rows(); ++c) {
        const std::complex<double> here = g(c, c);
        const std::complex<double> there = reference(c, c);
        if (std::abs(here) == 0.0 || std::abs(there) == 0.0) continue;
        const std::complex<double> rot = std::polar(1.0, std::arg(here) - std::arg(there));
        w.col(c) *= rot;
        g.row(c) *= std::conj(rot);
      }
    }
    link.combiners.push_back(std::move(w));
    link.effective.push_back(std::move(g));
  }
  link.total = link.effective.front();
  for (std::size_t m = 1; m < link.effective.size(); ++m) link.total += link.effective[m];
  return link;
}

// Single-stream transceiver shared by BF and DB.
struct BeamLink {
  Eigen::VectorXcd precoder;
  std::vector<Eigen::VectorXcd> received; // H_m f
  double energy = 0.0;                    // sum_m ||H_m f||^2
};

BeamLink build_beam_link(const std::vector<CustomizedChannel> &slots, const SystemConfig &cfg) {
  check_slots(slots);
  BeamLink link;
  const auto k = static_cast<double>(slots.front().t_active.cols());
  link.precoder = std::sqrt(cfg.transmit_power / k) * slots.front().t_active.rowwise().sum();
  for (const auto &s : slots) {
    link.received.push_back(s.exact_h * link.precoder);
    link.energy += link.received.back().squaredNorm();
  }
  return link;
}

} // namespace

SchemeResult run_ds(const std::vector<CustomizedChannel> &slots, const SystemConfig &cfg,
                    double gamma_th) {
  const StreamLink link = build_stream_link(slots, cfg);
  const auto m = static_cast<double>(slots.size());
  const Eigen::Index n = link.total.rows();

  SchemeResult res;
  res.scheme = slots.size() == 1 ? Scheme::SM : Scheme::DS;
  res.m_r = static_cast<int>(slots.size());
  const Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n, n) +
                             link.total * link.total.adjoint() / (m * cfg.noise_power);
  const Eigen::LLT<Eigen::MatrixXcd> llt(a);
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) log_det += std::log(std::real(llt.matrixLLT()(i, i)));
  res.se_bits_per_hz = 2.0 * log_det / std::numbers::ln2 / m;

  res.post_combine_snr.assign(static_cast<std::size_t>(n), 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    double amplitude = 0.0;
    for (const auto &s : slots) amplitude += std::abs(s.xi_active(i));
    res.post_combine_snr[static_cast<std::size_t>(i)] =
        amplitude * amplitude * cfg.transmit_power / (static_cast<double>(n) * m * cfg.noise_power);
  }
  res.outage = res.min_snr() < gamma_th;
  return res;
}

SchemeResult run_db(const std::vector<CustomizedChannel> &slots, const SystemConfig &cfg,
                    double gamma_th) {
  const BeamLink link = build_beam_link(slots, cfg);
  const auto m = static_cast<double>(slots.size());
  const auto k = static_cast<double>(slots.front().xi_active.size());

  SchemeResult res;
  res.scheme = slots.size() == 1 ? Scheme::BF : Scheme::DB;
  res.m_r = static_cast<int>(slots.size());
  res.se_bits_per_hz = std::log2(1.0 + link.energy / cfg.noise_power) / m;
  double coherent = 0.0;
  for (const auto &s : slots) {
    const double amplitude = s.xi_active.cwiseAbs().sum();
    coherent += amplitude * amplitude;
  }
  res.post_combine_snr = {cfg.transmit_power * coherent / (k * cfg.noise_power)};
  res.outage = res.min_snr() < gamma_th;
  return res;
}

SchemeResult run_sm(const CustomizedChannel &custom, const SystemConfig &cfg, double gamma_th) {
  return run_ds({custom}, cfg, gamma_th);
}

SchemeResult run_bf(const CustomizedChannel &custom, const SystemConfig &cfg, double gamma_th) {
  return run_db({custom}, cfg, gamma_th);
}

SchemeResult run_scheme(Scheme scheme, const std::vector<CustomizedChannel> &slots,
                        const SystemConfig &cfg, double gamma_th) {
  if (slots.empty()) fail(ErrorKind::DimensionMismatch, "at least one slot is required");
  switch (scheme) {
  case Scheme::SM: return run_sm(slots.front(), cfg, gamma_th);
  case Scheme::BF: return run_bf(slots.front(), cfg, gamma_th);
  case Scheme::DS: {
    SchemeResult r = run_ds(slots, cfg, gamma_th);
    r.scheme = Scheme::DS;
    return r;
  }
  case Scheme::DB: {
    SchemeResult r = run_db(slots, cfg, gamma_th);
    r.scheme = Scheme::DB;
    return r;
  }
  }
  fail(ErrorKind::InvalidArgument, "unknown scheme");
}

std::complex<double> qpsk_modulate(int b0, int b1) {
  constexpr double s = std::numbers::sqrt2 / 2.0;
  return {s * (1 - 2 * b0), s * (1 - 2 * b1)};
}

int qpsk_demodulate(std::complex<double> y) {
  return (y.real() < 0.0 ? 1 : 0) | (y.imag() < 0.0 ? 2 : 0);
}

SchemeResult ber_trial(Scheme scheme, const std::vector<CustomizedChannel> &slots,
                       const SystemConfig &cfg, std::uint64_t symbols, Philox &rng) {
  if (symbols < 1) fail(ErrorKind::InvalidArgument, "ber_trial needs at least one symbol");
  SchemeResult res;
  res.scheme = scheme;
  res.m_r = static_cast<int>(slots.size());
  const double sigma = std::sqrt(cfg.noise_power);
  const int n_rx = static_cast<int>(slots.at(0).exact_h.rows());

  if (scheme == Scheme::SM || scheme == Scheme::DS) {
    const std::vector<CustomizedChannel> used =
        scheme == Scheme::SM ? std::vector<CustomizedChannel>{slots.front()} : slots;
    const StreamLink link = build_stream_link(used, cfg);
    const Eigen::Index n = link.total.rows();
    if (n > 16) fail(ErrorKind::InvalidArgument, "ber_trial supports at most 16 streams");
    const Eigen::VectorXcd gains = link.total.diagonal();
    Eigen::VectorXcd s(n), y(n), noise(n_rx);
    for (std::uint64_t t = 0; t < symbols; ++t) {
      const std::uint32_t bits = rng();
      for (Eigen::Index i = 0; i < n; ++i) {
        s(i) = qpsk_modulate(static_cast<int>((bits >> (2 * i)) & 1u),
                             static_cast<int>((bits >> (2 * i + 1)) & 1u));
      }
      y.noalias() = link.total * s;
      for (const auto &w : link.combiners) {
        for (int r = 0; r < n_rx; ++r) noise(r) = sigma * rng.complex_normal();
        y.noalias() += w.adjoint() * noise;
      }
      for (Eigen::Index i = 0; i < n; ++i) {
        const int sent = static_cast<int>((bits >> (2 * i)) & 3u);
        const int got = qpsk_demodulate(y(i) / gains(i));
        res.bit_errors += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(sent ^ got)));
      }
      res.bits_sent += static_cast<std::uint64_t>(2 * n);
    }
    return res;
  }

  const std::vector<CustomizedChannel> used =
      scheme == Scheme::BF ? std::vector<CustomizedChannel>{slots.front()} : slots;
  const BeamLink link = build_beam_link(used, cfg);
  const double norm = std::sqrt(link.energy);
  for (std::uint64_t t = 0; t < symbols; ++t) {
    const int bits = static_cast<int>(rng() & 3u);
    const std::complex<double> s = qpsk_modulate(bits & 1, (bits >> 1) & 1);
    std::complex<double> y = norm * s;
    for (const auto &h : link.received) {
      std::complex<double> acc{0.0, 0.0};
      for (int r = 0; r < n_rx; ++r) acc += std::conj(h(r)) * (sigma * rng.complex_normal());
      y += acc / norm;
    }
    res.bit_errors += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(bits ^ qpsk_demodulate(y))));
    res.bits_sent += 2;
  }
  return res;
}

} // namespace riscust
