// Copyright 2026 VST Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VST_CORE_ERROR_H_
#define VST_CORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace vst {

// Error taxonomy used across the library. The CLI maps Validation, Config,
// Format and Io to exit code 2 and Numeric to exit code 3.
enum class ErrorKind {
  kValidation,
  kConfig,
  kFormat,
  kIo,
  kNumeric,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  static Error Validation(const std::string& msg) {
    return Error(ErrorKind::kValidation, msg);
  }
  static Error Config(const std::string& msg) {
    return Error(ErrorKind::kConfig, msg);
  }
  static Error Format(const std::string& msg) {
    return Error(ErrorKind::kFormat, msg);
  }
  static Error Io(const std::string& msg) { return Error(ErrorKind::kIo, msg); }
  static Error Numeric(const std::string& msg) {
    return Error(ErrorKind::kNumeric, msg);
  }

 private:
  ErrorKind kind_;
};

#define VST_CHECK(cond, kind, msg)               \
  do {                                           \
    if (!(cond)) throw ::vst::Error((kind), (msg)); \
  } while (0)

}  // namespace vst

#endif  // VST_CORE_ERROR_H_
