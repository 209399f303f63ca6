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

#ifndef CHARTERLAB_CORE_ANNOTATION_H_
#define CHARTERLAB_CORE_ANNOTATION_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charterlab/core/ontology.h"
#include "charterlab/core/rect.h"
#include "json.hpp"

namespace charterlab {

struct RectAnnotation {
  Rect rect;
  ClassId class_id = ClassId::kNoClass;
  std::optional<std::string> transcription;
  std::optional<std::string> comment;
  // Fields this version does not know about, kept verbatim for rewrite.
  nlohmann::json extra = nlohmann::json::object();

  friend bool operator==(const RectAnnotation&, const RectAnnotation&) = default;
};

// Every annotation of one image. This is the unit stored on disk, one JSON
// file per image.
struct AnnotationDoc {
  static constexpr int kSchemaVersion = 1;

  int schema_version = kSchemaVersion;
  std::string image_id;
  int image_width = 0;
  int image_height = 0;
  std::vector<RectAnnotation> annotations;
  nlohmann::json extra = nlohmann::json::object();

  friend bool operator==(const AnnotationDoc&, const AnnotationDoc&) = default;
};

// JSON layout:
//   {"schema_version": 1, "image_id": "...", "width": W, "height": H,
//    "annotations": [{"left": .., "top": .., "right": .., "bottom": ..,
//                     "class": id, "transcription": str|null,
//                     "comment": str|null}, ...]}
// Any other member, at either level, round-trips through `extra`.
nlohmann::json DocToJson(const AnnotationDoc& doc);

// Throws Error(kParse) on structural problems (missing fields, wrong types).
// Geometry and class ids are not checked here; see ValidateDoc().
AnnotationDoc DocFromJson(const nlohmann::json& json);

// Canonical text form: keys sorted, two-space indent, trailing newline. Two
// equal docs always serialize to the same bytes.
std::string SerializeDoc(const AnnotationDoc& doc);
AnnotationDoc ParseDoc(std::string_view text);

AnnotationDoc LoadDoc(const std::filesystem::path& path);
void SaveDoc(const std::filesystem::path& path, const AnnotationDoc& doc);

nlohmann::json RectToJson(const Rect& rect);
Rect RectFromJson(const nlohmann::json& json);

}  // namespace charterlab

#endif  // CHARTERLAB_CORE_ANNOTATION_H_
