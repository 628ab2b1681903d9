// Copyright 2026 The dpforms Authors
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

#ifndef DPFORMS_CORE_ERROR_HPP_
#define DPFORMS_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dpforms {

enum class ErrorKind {
  kDomain,           // well-formed request with no mathematical answer
  kInvalidArgument,  // malformed input (parse failures, bad degrees)
  kInternal,         // a self-check inside the library failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void ThrowDomain(const std::string& what) {
  throw Error(ErrorKind::kDomain, what);
}
[[noreturn]] inline void ThrowInvalid(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, what);
}
[[noreturn]] inline void ThrowInternal(const std::string& what) {
  throw Error(ErrorKind::kInternal, what);
}

}  // namespace dpforms

#endif  // DPFORMS_CORE_ERROR_HPP_
