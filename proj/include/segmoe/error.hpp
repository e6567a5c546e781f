/* Copyright 2026 The segmoe Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef SEGMOE_ERROR_HPP_
#define SEGMOE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace segmoe {

enum class ErrorCode {
  kInvalidArgument = 1,
  kShape,
  kIo,
  kFormat,
  kState,
  kNumeric,
  kConfig,
};

// Single exception type for the core; the C API maps `code()` onto status
// values one-to-one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool cond, ErrorCode code, const char* what) {
  if (!cond) Fail(code, what);
}

inline void Require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) Fail(code, what);
}

}  // namespace segmoe

#endif  // SEGMOE_ERROR_HPP_
