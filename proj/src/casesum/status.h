// Copyright 2026 The Casesum Authors.
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

#ifndef CASESUM_STATUS_H_
#define CASESUM_STATUS_H_

#include <stdexcept>
#include <string>

namespace casesum {

enum class ErrorCode {
  kEmptyDocument,
  kInvalidK,
  kInvalidAlpha,
  kInvalidArgument,
  kIoError,
};

const char *ErrorCodeName(ErrorCode code);

// Exception thrown by all library operations on contract violations.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace casesum

#endif  // CASESUM_STATUS_H_
