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

#ifndef CHARTERLAB_FORMATS_COCO_H_
#define CHARTERLAB_FORMATS_COCO_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "charterlab/core/annotation.h"
#include "charterlab/core/ontology.h"
#include "json.hpp"

namespace charterlab {

struct CocoImage {
  std::int64_t id = 0;
  std::string file_name;
  int width = 0;
  int height = 0;
};

struct CocoAnnotation {
  std::int64_t id = 0;
  std::int64_t image_id = 0;
  int category_id = 0;
  std::array<double, 4> bbox{};  // x, y, width, height
};

struct CocoCategory {
  int id = 0;
  std::string name;
  std::string supercategory;
};

// The object-detection subset of the COCO layout.
struct CocoBundle {
  std::vector<CocoImage> images;
  std::vector<CocoAnnotation> annotations;
  std::vector<CocoCategory> categories;
};

nlohmann::json CocoToJson(const CocoBundle& bundle);
// Throws Error(kParse) when required members are missing or mistyped.
CocoBundle CocoFromJson(const nlohmann::json& json);

// One image per doc (ids from 1, file_name = image_id), one category per
// ontology class except id 0, annotation ids from 1 in input order. Box
// corners are rounded half-up to whole pixels before conversion to
// [x, y, w, h].
//
// Throws Error(kDuplicateImageId) when two docs share an image id and
// Error(kValidationFailed) when a doc fails ValidateDoc() or a box collapses
// to zero size after rounding.
CocoBundle ExportCoco(std::span<const AnnotationDoc> docs,
                      const Ontology& onto);

// Inverse of ExportCoco(); docs follow the image order, annotations keep
// their order within an image. COCO carries no transcriptions or comments, so
// both come back empty.
//
// Throws Error(kMissingImage) for annotations pointing at an absent image and
// Error(kUnknownCategory) for category ids missing from the bundle or the
// ontology (or equal to the reserved id 0).
std::vector<AnnotationDoc> ImportCoco(const CocoBundle& bundle,
                                      const Ontology& onto);

}  // namespace charterlab

#endif  // CHARTERLAB_FORMATS_COCO_H_
