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

#ifndef RISCUST_TOOLS_SELFTEST_HPP
#define RISCUST_TOOLS_SELFTEST_HPP

#include <iosfwd>

namespace riscust::cli {

// Quick invariant checks; prints one line per check, returns the failure count.
int run_selftest(std::ostream &out);

} // namespace riscust::cli

#endif
