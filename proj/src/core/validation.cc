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

#include "charterlab/core/validation.h"

#include <cstdint>

namespace charterlab {

std::string_view ViolationRuleName(ViolationRule rule) {
  switch (rule) {
    case ViolationRule::kBadImageSize: return "BadImageSize";
    case ViolationRule::kInvalidRect: return "InvalidRect";
    case ViolationRule::kOutOfBounds: return "OutOfBounds";
    case ViolationRule::kReservedClass: return "ReservedClass";
    case ViolationRule::kUnknownClass: return "UnknownClass";
    case ViolationRule::kInvalidUnicode: return "InvalidUnicode";
    case ViolationRule::kImageMismatch: return "ImageMismatch";
  }
  return "Unknown";
}

bool IsValidUtf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<std::uint8_t>(text[i]);
    int extra = 0;
    std::uint32_t cp = 0;
    if (lead < 0x80) {
      ++i;
      continue;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      cp = lead & 0x07;
    } else {
      return false;
    }
    if (i + extra >= text.size()) return false;
    for (int k = 1; k <= extra; ++k) {
      const auto cont = static_cast<std::uint8_t>(text[i + k]);
      if ((cont & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cont & 0x3F);
    }
    // Overlong forms, surrogates and values past U+10FFFF.
    static constexpr std::uint32_t kMinForLength[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[extra]) return false;
    if (cp >= 0xD800 && cp <= 0xDFFF) return false;
    if (cp > 0x10FFFF) return false;
    i += extra + 1;
  }
  return true;
}

std::vector<Violation> ValidateDoc(const AnnotationDoc& doc,
                                   const Ontology& onto) {
  std::vector<Violation> out;
  const bool size_ok = doc.image_width > 0 && doc.image_height > 0;
  if (!size_ok) {
    out.push_back({Violation::kDocumentLevel, ViolationRule::kBadImageSize,
                   "image width and height must be positive"});
  }
  const Rect bounds{0.0, 0.0, static_cast<double>(doc.image_width),
                    static_cast<double>(doc.image_height)};
  for (int i = 0; i < static_cast<int>(doc.annotations.size()); ++i) {
    const RectAnnotation& a = doc.annotations[i];
    if (!a.rect.IsValid()) {
      out.push_back({i, ViolationRule::kInvalidRect,
                     "rect coordinates must be finite, non-negative, with "
                     "left < right and top < bottom"});
    } else if (size_ok && !bounds.Contains(a.rect)) {
      out.push_back({i, ViolationRule::kOutOfBounds,
                     "rect extends outside the image"});
    }
    if (a.class_id == ClassId::kNoClass) {
      out.push_back({i, ViolationRule::kReservedClass,
                     "class 0 is reserved and may not be assigned"});
    } else if (!onto.Contains(a.class_id)) {
      out.push_back({i, ViolationRule::kUnknownClass,
                     "class id " + std::to_string(ToInt(a.class_id)) +
                         " is not in the ontology"});
    }
    if ((a.transcription && !IsValidUtf8(*a.transcription)) ||
        (a.comment && !IsValidUtf8(*a.comment))) {
      out.push_back({i, ViolationRule::kInvalidUnicode,
                     "transcription and comment must be valid UTF-8"});
    }
  }
  return out;
}

}  // namespace charterlab
