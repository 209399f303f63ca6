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

#include "charterlab/formats/yolo.h"

#include <cstdio>
#include <sstream>

#include "charterlab/core/error.h"

namespace charterlab {

std::vector<YoloRecord> ToYoloRecords(const AnnotationDoc& doc,
                                      const YoloOptions& options) {
  if (doc.image_width <= 0 || doc.image_height <= 0) {
    throw Error(ErrorCode::kValidationFailed,
                "doc '" + doc.image_id + "' has no image size");
  }
  const double width = doc.image_width;
  const double height = doc.image_height;
  const Rect bounds{0.0, 0.0, width, height};

  std::vector<YoloRecord> records;
  for (const auto& a : doc.annotations) {
    if (ToInt(a.class_id) <= 0 || !a.rect.IsValid() ||
        !bounds.Contains(a.rect)) {
      throw Error(ErrorCode::kValidationFailed,
                  "doc '" + doc.image_id + "' must be validated before export");
    }
    if (options.drop_ignore && a.class_id == ClassId::kIgnore) continue;
    records.push_back({a.class_id,
                       (a.rect.left + a.rect.right) / 2.0 / width,
                       (a.rect.top + a.rect.bottom) / 2.0 / height,
                       a.rect.width() / width, a.rect.height() / height});
  }
  return records;
}

std::string FormatYoloLine(const YoloRecord& r) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d %.6f %.6f %.6f %.6f", ToInt(r.class_id),
                r.cx, r.cy, r.w, r.h);
  return buf;
}

std::vector<std::string> ExportYolo(const AnnotationDoc& doc,
                                    const YoloOptions& options) {
  std::vector<std::string> lines;
  for (const auto& r : ToYoloRecords(doc, options)) {
    lines.push_back(FormatYoloLine(r));
  }
  return lines;
}

YoloRecord ParseYoloLine(std::string_view line) {
  std::istringstream in{std::string(line)};
  int cls = 0;
  YoloRecord r;
  if (!(in >> cls >> r.cx >> r.cy >> r.w >> r.h)) {
    throw Error(ErrorCode::kParse, "malformed YOLO line: " + std::string(line));
  }
  std::string rest;
  if (in >> rest) {
    throw Error(ErrorCode::kParse, "trailing fields in YOLO line");
  }
  r.class_id = static_cast<ClassId>(cls);
  return r;
}

Rect DenormalizeYolo(const YoloRecord& r, int image_width, int image_height) {
  const double cx = r.cx * image_width;
  const double cy = r.cy * image_height;
  const double hw = r.w * image_width / 2.0;
  const double hh = r.h * image_height / 2.0;
  return {cx - hw, cy - hh, cx + hw, cy + hh};
}

std::string YoloNamesFile(const Ontology& onto) {
  std::string out;
  for (const auto& label : onto.labels()) {
    out += label;
    out += '\n';
  }
  return out;
}

}  // namespace charterlab
