// Copyright 2026 The RAE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rae {

// Broad failure classes. The CLI maps each onto a distinct exit code.
enum class ErrorKind {
  kUsage,       // bad arguments, out-of-range ids, wrong semantics kind
  kValidation,  // malformed or invariant-violating input documents
  kCapacity,    // problem exceeds a configured hard cap
  kInternal,
};

// Every error raised by the library. `code()` is a stable short identifier
// (e.g. "diagonal_violation") that tests and tooling can match on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string code,
                              const std::string& message) {
  throw Error(kind, std::move(code), message);
}

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return 2;
    case ErrorKind::kValidation:
      return 3;
    case ErrorKind::kCapacity:
      return 4;
    case ErrorKind::kInternal:
      break;
  }
  return 1;
}

}  // namespace rae
