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

#ifndef CHARTERLAB_CORE_VALIDATION_H_
#define CHARTERLAB_CORE_VALIDATION_H_

#include <string>
#include <string_view>
#include <vector>

#include "charterlab/core/annotation.h"
#include "charterlab/core/ontology.h"

namespace charterlab {

enum class ViolationRule {
  kBadImageSize,    // width or height not positive
  kInvalidRect,     // non-finite, negative or inverted coordinates
  kOutOfBounds,     // rect leaves [0,width] x [0,height]
  kReservedClass,   // class 0
  kUnknownClass,    // id not in the ontology
  kInvalidUnicode,  // transcription or comment is not UTF-8
  kImageMismatch,   // doc id or size disagrees with the target image
};

std::string_view ViolationRuleName(ViolationRule rule);

struct Violation {
  static constexpr int kDocumentLevel = -1;

  int index = kDocumentLevel;  // annotation index
  ViolationRule rule = ViolationRule::kInvalidRect;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Empty result means the doc is valid. Violations are listed per annotation
// in index order; rect rules are checked before class rules.
std::vector<Violation> ValidateDoc(const AnnotationDoc& doc,
                                   const Ontology& onto);

bool IsValidUtf8(std::string_view text);

}  // namespace charterlab

#endif  // CHARTERLAB_CORE_VALIDATION_H_
