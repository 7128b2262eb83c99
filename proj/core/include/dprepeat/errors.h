// Copyright 2026 The dprepeat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPREPEAT_ERRORS_H_
#define DPREPEAT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dprepeat {

// Coarse failure categories. The CLI maps these onto its exit codes.
enum class ErrorKind {
  kInvalidArgument,  // violated precondition (ranges, normalization, sizes)
  kParse,            // malformed JSON or key text
  kGuard,            // enumeration would exceed a size guard
  kIncompatible,     // monitoring kind does not match the requested analysis
  kZeroProbability,  // conditioning on an event of probability zero
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void Require(bool condition, const std::string& what) {
  if (!condition) Fail(ErrorKind::kInvalidArgument, what);
}

}  // namespace dprepeat

#endif  // DPREPEAT_ERRORS_H_
