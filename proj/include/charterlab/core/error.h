// Copyright 2026 The Charterlab Authors. All Rights Reserved.
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

#ifndef CHARTERLAB_CORE_ERROR_H_
#define CHARTERLAB_CORE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace charterlab {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kDegenerateRect,
  kDuplicateImageId,
  kUnknownCategory,
  kMissingImage,
  kNonPositiveDiagonal,
  kNoGroundTruth,
  kLengthMismatch,
  kEmptyInput,
  kDegenerateInput,
  kUnknownImage,
  kValidationFailed,
  kVersionConflict,
  kNothingToExport,
  kUnknownFormat,
  kWorkspaceUnreadable,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported with this exception type; callers branch
// on code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace charterlab

#endif  // CHARTERLAB_CORE_ERROR_H_
