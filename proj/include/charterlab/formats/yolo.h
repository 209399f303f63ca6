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

#ifndef CHARTERLAB_FORMATS_YOLO_H_
#define CHARTERLAB_FORMATS_YOLO_H_

#include <string>
#include <string_view>
#include <vector>

#include "charterlab/core/annotation.h"
#include "charterlab/core/ontology.h"

namespace charterlab {

// One line of a YOLO label file; centre and size normalised by the image
// dimensions.
struct YoloRecord {
  ClassId class_id = ClassId::kNoClass;
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;
};

struct YoloOptions {
  // "Ignore" boxes are exported unless this is set.
  bool drop_ignore = false;
};

std::vector<YoloRecord> ToYoloRecords(const AnnotationDoc& doc,
                                      const YoloOptions& options = {});

// "class cx cy w h" with six decimals.
std::string FormatYoloLine(const YoloRecord& record);

// Label lines for one image. Transcriptions and comments are not part of the
// format and are dropped. Throws Error(kValidationFailed) for reserved or
// negative class ids, invalid rects and rects outside the image.
std::vector<std::string> ExportYolo(const AnnotationDoc& doc,
                                    const YoloOptions& options = {});

// Throws Error(kParse) for lines that are not five numeric fields.
YoloRecord ParseYoloLine(std::string_view line);
Rect DenormalizeYolo(const YoloRecord& record, int image_width,
                     int image_height);

// The class labels in id order, one per line.
std::string YoloNamesFile(const Ontology& onto);

}  // namespace charterlab

#endif  // CHARTERLAB_FORMATS_YOLO_H_
