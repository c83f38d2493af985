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

#include "riscust/analysis.hpp"

#include "riscust/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace riscust {

namespace {

constexpr double kEps = 1e-16;
constexpr double kSeriesLimit = 6.0;

double ei_series(double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    term *= x / k;
    const double add = term / k;
    sum += add;
    if (std::abs(add) < kEps * std::abs(sum)) break;
  }
  return std::numbers::egamma + std::log(-x) + sum;
}

// e^z E_1(z) by the modified Lentz continued fraction, z >= 1.
double scaled_e1_fraction(double z) {
  constexpr double tiny = 1e-300;
  double b = z + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

double tr1_and_half_tr2(const std::vector<double> &d) {
  // tr_1(D) + (pi/2) tr_2(D^{1/2})
  double s = 0.0;
  double sq = 0.0;
  for (double v : d) {
    s += v;
    sq += std::sqrt(v);
  }
  const double tr2_half = 0.5 * (sq * sq - s);
  return s + 0.5 * std::numbers::pi * tr2_half;
}

double power_scale(const ClosedFormParams &p) {
  return p.noise_power * p.l_r * (p.kappa + 1.0) / (p.n_tx * p.kappa);
}

std::vector<double> head(const std::vector<double> &v, int n) {
  return {v.begin(), v.begin() + n};
}

double crossing_rhs(const ClosedFormParams &p, const std::vector<double> &profile) {
  const std::vector<double> d_nr = head(profile, p.n_rx);
  return static_cast<double>(p.n_rx) / p.n_ris() * tr1_and_half_tr2(profile) - sym_func(d_nr, 1);
}

void require_nr(const ClosedFormParams &p, int n_rx) {
  p.validate();
  if (p.n_rx != n_rx) fail(ErrorKind::InvalidArgument, "closed form needs N_R = " + std::to_string(n_rx));
}

} // namespace

double exp_integral_ei(double x) {
  if (!(x < 0.0)) fail(ErrorKind::Domain, "Ei(x) is implemented for x < 0 only");
  if (-x < kSeriesLimit) return ei_series(x);
  return -scaled_e1_fraction(-x) * std::exp(x);
}

double scaled_e1(double c) {
  if (!(c > 0.0)) fail(ErrorKind::Domain, "scaled_e1 needs c > 0");
  if (c < kSeriesLimit) return -std::exp(c) * ei_series(-c);
  return scaled_e1_fraction(c);
}

void ClosedFormParams::validate() const {
  if (profile.empty()) fail(ErrorKind::InvalidArgument, "empty RIS profile");
  for (double v : profile) {
    if (!(v > 0.0)) fail(ErrorKind::InvalidArgument, "profile entries must be positive");
  }
  if (!(transmit_power >= 0.0) || !(noise_power > 0.0) || !(kappa > 0.0)) {
    fail(ErrorKind::InvalidArgument, "power, noise and kappa must be positive");
  }
  if (l_r < 1 || n_tx < 1 || n_rx < 1 || m_r < 1) {
    fail(ErrorKind::InvalidArgument, "counts must be positive");
  }
  if (n_rx > n_ris()) fail(ErrorKind::InvalidArgument, "N_R exceeds the number of RISs");
}

ClosedFormParams ClosedFormParams::equal_c(const SystemConfig &cfg) {
  ClosedFormParams p;
  p.profile.assign(static_cast<std::size_t>(cfg.n_ris), cfg.c_scale * cfg.c_scale);
  p.transmit_power = cfg.transmit_power;
  p.noise_power = cfg.noise_power;
  p.kappa = cfg.rician_kappa;
  p.l_r = cfg.l_r;
  p.n_tx = cfg.n_tx;
  p.n_rx = cfg.n_rx;
  p.m_r = cfg.m_r;
  return p;
}

ClosedFormParams ClosedFormParams::from_deployment(const SystemConfig &cfg, const Deployment &dep) {
  ClosedFormParams p = equal_c(cfg);
  p.profile.clear();
  for (std::size_t k = 0; k < dep.n_ris(); ++k) {
    const double a = dep.ris_element_counts[k] * dep.path_losses[k];
    p.profile.push_back(a * a);
  }
  return p;
}

std::vector<double> sm_constants(const ClosedFormParams &p) {
  p.validate();
  if (!(p.transmit_power > 0.0)) fail(ErrorKind::InvalidArgument, "transmit power must be positive");
  std::vector<double> c;
  for (int n = 0; n < p.n_rx; ++n) {
    c.push_back(power_scale(p) / (p.transmit_power * p.profile[static_cast<std::size_t>(n)]));
  }
  return c;
}

double se_sm_approx(const std::vector<double> &c) {
  double sum = 0.0;
  for (double v : c) sum += scaled_e1(v);
  return sum / std::numbers::ln2;
}

double se_sm_upper(const std::vector<double> &c) {
  double sum = 0.0;
  for (double v : c) {
    if (!(v > 0.0)) fail(ErrorKind::Domain, "c_n must be positive");
    sum += std::log2(1.0 + 1.0 / v);
  }
  return sum;
}

double se_bf_upper(const ClosedFormParams &p) { return se_db_upper(p, 1); }

double se_db_upper(const ClosedFormParams &p, int m_r) {
  p.validate();
  if (m_r < 1) fail(ErrorKind::InvalidArgument, "m_r must be >= 1");
  double s = 0.0;
  double sq = 0.0;
  for (double v : p.profile) {
    s += v;
    sq += std::sqrt(v);
  }
  const double cross = sq * sq - s; // sum over n != m
  const double snr = p.transmit_power * p.n_tx * p.n_rx * p.kappa /
                     (p.noise_power * p.n_ris() * p.l_r * (p.kappa + 1.0)) *
                     (s + 0.25 * std::numbers::pi * cross);
  return std::log2(1.0 + m_r * snr) / m_r;
}

double sym_func(const std::vector<double> &d, int k) {
  if (k < 0 || k > static_cast<int>(d.size())) {
    fail(ErrorKind::IndexOutOfRange, "symmetric function order out of range");
  }
  std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (double v : d) {
    for (int j = k; j >= 1; --j) e[static_cast<std::size_t>(j)] += v * e[static_cast<std::size_t>(j - 1)];
  }
  return e[static_cast<std::size_t>(k)];
}

double crossing_point(const ClosedFormParams &p) {
  p.validate();
  if (p.n_rx < 2) fail(ErrorKind::InvalidArgument, "a crossing point needs N_R >= 2");
  const double scale = *std::max_element(p.profile.begin(), p.profile.end());
  std::vector<double> profile = p.profile;
  for (double &v : profile) v /= scale;
  const double rhs = crossing_rhs(p, profile);
  if (!(rhs > 0.0)) fail(ErrorKind::NoCrossing, "the SM and BF bounds do not cross for E > 0");

  const std::vector<double> d_nr = head(profile, p.n_rx);
  std::vector<double> tr(static_cast<std::size_t>(p.n_rx) + 1);
  for (int n = 2; n <= p.n_rx; ++n) tr[static_cast<std::size_t>(n)] = sym_func(d_nr, n);
  const auto lhs = [&](double g) {
    double acc = 0.0;
    double power = 1.0;
    for (int n = 2; n <= p.n_rx; ++n) {
      power *= g;
      acc += power * tr[static_cast<std::size_t>(n)];
    }
    return acc;
  };

  double lo = 0.0;
  double hi = 1.0;
  while (lhs(hi) < rhs) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) fail(ErrorKind::NoCrossing, "crossing point diverges");
  }
  for (int it = 0; it < 400 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (lhs(mid) < rhs ? lo : hi) = mid;
  }
  const double g = 0.5 * (lo + hi) / scale;
  return g * power_scale(p);
}

double crossing_point_nr2(const ClosedFormParams &p) {
  require_nr(p, 2);
  const std::vector<double> d2 = head(p.profile, 2);
  return power_scale(p) * crossing_rhs(p, p.profile) / sym_func(d2, 2);
}

double crossing_point_nr3(const ClosedFormParams &p) {
  require_nr(p, 3);
  const std::vector<double> d3 = head(p.profile, 3);
  const double tr1 = sym_func(d3, 1);
  const double tr2 = sym_func(d3, 2);
  const double tr3 = sym_func(d3, 3);
  const double inner = 3.0 / p.n_ris() * tr1_and_half_tr2(p.profile);
  return power_scale(p) * (std::sqrt(tr2 * tr2 - 4.0 * tr3 * (tr1 - inner)) - tr2) / (2.0 * tr3);
}

double crossing_point_nr2_equal_c(const ClosedFormParams &p, double c_scale) {
  require_nr(p, 2);
  return p.noise_power * p.l_r * (p.kappa + 1.0) * std::numbers::pi * (p.n_ris() - 1) /
         (2.0 * p.n_tx * p.kappa * c_scale * c_scale);
}

double crossing_point_nr3_equal_c(const ClosedFormParams &p, double c_scale) {
  require_nr(p, 3);
  return power_scale(p) * (std::sqrt(9.0 + 3.0 * std::numbers::pi * (p.n_ris() - 1)) - 3.0) /
         (2.0 * c_scale * c_scale);
}

} // namespace riscust
