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

#include "charterlab/core/error.h"

namespace charterlab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kDegenerateRect: return "DegenerateRect";
    case ErrorCode::kDuplicateImageId: return "DuplicateImageId";
    case ErrorCode::kUnknownCategory: return "UnknownCategory";
    case ErrorCode::kMissingImage: return "MissingImage";
    case ErrorCode::kNonPositiveDiagonal: return "NonPositiveDiagonal";
    case ErrorCode::kNoGroundTruth: return "NoGroundTruth";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kUnknownImage: return "UnknownImage";
    case ErrorCode::kValidationFailed: return "ValidationFailed";
    case ErrorCode::kVersionConflict: return "VersionConflict";
    case ErrorCode::kNothingToExport: return "NothingToExport";
    case ErrorCode::kUnknownFormat: return "UnknownFormat";
    case ErrorCode::kWorkspaceUnreadable: return "WorkspaceUnreadable";
  }
  return "Unknown";
}

}  // namespace charterlab
