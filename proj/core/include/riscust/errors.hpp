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

#ifndef RISCUST_ERRORS_HPP
#define RISCUST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace riscust {

/// Failure categories. The CLI maps each one to its own exit status.
enum class ErrorKind {
  InvalidArgument,
  Configuration,
  DimensionMismatch,
  IndexOutOfRange,
  Domain,
  UndefinedPhase,
  Infeasible,
  SearchTooLarge,
  NoCrossing,
  Io,
};

const char *to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) {
  throw Error(kind, what);
}

} // namespace riscust

#endif // RISCUST_ERRORS_HPP
