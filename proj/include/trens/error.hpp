/*
 * Copyright 2026 The trens authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TRENS_ERROR_HPP
#define TRENS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace trens {

/// Error category, aligned with the CLI exit-code contract
/// (input/validation problems exit 2, numerical failures exit 3).
enum class ErrorCode {
  InvalidInput,  // bad arguments, domain violations, malformed files
  Validation,    // data fails an invariant (with coordinates in the message)
  Compute,       // numerical failure (degenerate pool, optimizer failure, ...)
  Io,            // file system problems
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
  throw Error(ErrorCode::InvalidInput, msg);
}
[[noreturn]] inline void throw_validation(const std::string& msg) {
  throw Error(ErrorCode::Validation, msg);
}
[[noreturn]] inline void throw_compute(const std::string& msg) {
  throw Error(ErrorCode::Compute, msg);
}
[[noreturn]] inline void throw_io(const std::string& msg) {
  throw Error(ErrorCode::Io, msg);
}

}  // namespace trens

#endif  // TRENS_ERROR_HPP
