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

#include "riscust/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace riscust;

TEST(Philox, KnownAnswerZeroKeyZeroCounter) {
  Philox g(0, 0);
  EXPECT_EQ(g(), 0x6627e8d5u);
  EXPECT_EQ(g(), 0xe169c58du);
  EXPECT_EQ(g(), 0xbc57ac4cu);
  EXPECT_EQ(g(), 0x9b00dbd8u);
}

TEST(Philox, SameKeySameSequence) {
  Philox a(42, 7);
  Philox b(42, 7);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a(), b());
}

TEST(Philox, StreamsDiffer) {
  std::set<std::uint32_t> first;
  for (std::uint64_t s = 0; s < 64; ++s) {
    Philox g(1, s);
    first.insert(g());
  }
  EXPECT_EQ(first.size(), 64u);
  EXPECT_NE(make_stream(5, 0, 0, StreamPurpose::Geometry)(),
            make_stream(5, 0, 0, StreamPurpose::Fading)());
  EXPECT_NE(make_stream(5, 1, 0, StreamPurpose::Fading)(),
            make_stream(5, 0, 1, StreamPurpose::Fading)());
}

TEST(Philox, UniformAndNormalMoments) {
  Philox g(3, 0);
  const int n = 200000;
  double su = 0.0;
  double sn = 0.0;
  double sn2 = 0.0;
  double sc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = g.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
    const double z = g.normal();
    sn += z;
    sn2 += z * z;
    sc += std::norm(g.complex_normal());
  }
  EXPECT_NEAR(su / n, 0.5, 0.005);
  EXPECT_NEAR(sn / n, 0.0, 0.01);
  EXPECT_NEAR(sn2 / n, 1.0, 0.01);
  EXPECT_NEAR(sc / n, 1.0, 0.01);
}
