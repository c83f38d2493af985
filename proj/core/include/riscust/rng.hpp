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

#ifndef RISCUST_RNG_HPP
#define RISCUST_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <limits>

namespace riscust {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123).
///
/// Key = 64-bit seed. Counter: upper 64 bits carry the stream index, lower
/// 64 bits advance as values are consumed.
class Philox {
public:
  using result_type = std::uint32_t;

  Philox(std::uint64_t key, std::uint64_t stream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Standard normal via Box-Muller; deterministic given the stream.
  double normal() noexcept;
  /// CN(0, 1) = (x + jy) / sqrt(2).
  std::complex<double> complex_normal() noexcept;

private:
  void refill() noexcept;

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int next_ = 4;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// What a stream is used for. Distinct purposes never share values.
enum class StreamPurpose : std::uint32_t {
  Geometry = 1,   ///< Rx position and all path angles of an angle epoch
  AngleError = 2, ///< estimation error applied within an angle epoch
  Fading = 3,     ///< small-scale fading of one fading epoch
  Noise = 4,      ///< symbols and receiver noise for BER trials
  Test = 99,
};

/// Stream for (base_seed, angle epoch, fading epoch, purpose).
Philox make_stream(std::uint64_t base_seed, std::uint64_t angle_epoch,
                   std::uint64_t fading_epoch, StreamPurpose purpose);

} // namespace riscust

#endif // RISCUST_RNG_HPP
