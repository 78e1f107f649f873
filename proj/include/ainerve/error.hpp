// Copyright 2026 The ainerve Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace ainerve {

/// Failure categories surfaced by the library. The C API maps these onto
/// status codes one to one.
enum class Errc {
  invalid_argument,   // dimension or index mismatch in a call
  invalid_input,      // malformed or schema-violating data
  precondition,       // input is well formed but violates an operation precondition
  cap_exceeded,       // a query went beyond a truncation dimension
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }
[[noreturn, gnu::cold, gnu::noinline]] inline void fail(Errc code, const char* what) { throw Error(code, what); }

inline void require(bool condition, Errc code, const std::string& what) {
  if (!condition) fail(code, what);
}
inline void require(bool condition, Errc code, const char* what) {
  if (!condition) [[unlikely]] fail(code, what);
}

}  // namespace ainerve
