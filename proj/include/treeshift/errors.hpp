// Copyright 2026 The treeshift Authors
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

#ifndef TREESHIFT_ERRORS_HPP_
#define TREESHIFT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace treeshift {

// Error categories. The numeric values of kInput and kCapExceeded double as
// CLI exit codes.
enum class ErrorCode {
  kInput = 2,         // malformed or inconsistent input, violated precondition
  kCapExceeded = 3,   // enumeration cap hit
  kInconsistency = 4  // an internal cross-check disagreed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Error InputError(const std::string& what) {
  return Error(ErrorCode::kInput, what);
}

inline Error CapError(const std::string& what) {
  return Error(ErrorCode::kCapExceeded, what);
}

}  // namespace treeshift

#endif  // TREESHIFT_ERRORS_HPP_
