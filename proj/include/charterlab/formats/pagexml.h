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

#ifndef CHARTERLAB_FORMATS_PAGEXML_H_
#define CHARTERLAB_FORMATS_PAGEXML_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charterlab/core/annotation.h"
#include "charterlab/core/ontology.h"

namespace charterlab {

inline constexpr std::string_view kPageXmlNamespace =
    "http://schema.primaresearch.org/PAGE/gts/pagecontent/2019-07-15";

struct PagePoint {
  long x = 0;
  long y = 0;

  friend bool operator==(const PagePoint&, const PagePoint&) = default;
};

struct PageRegion {
  enum class Kind { kText, kCustom };

  Kind kind = Kind::kCustom;
  std::string id;
  std::string class_label;
  // PAGE TextRegion type ("paragraph", "marginalia", ...); empty for custom
  // regions.
  std::string text_type;
  // Rect corners clockwise from the top-left.
  std::array<PagePoint, 4> polygon{};
  std::optional<std::string> text;
  std::optional<std::string> comment;
};

struct PageXmlDoc {
  std::string image_filename;
  int image_width = 0;
  int image_height = 0;
  std::vector<PageRegion> regions;
};

struct PageXmlOptions {
  std::string creator = "charterlab";
  // Written to both Created and LastChange; fixed by default so output is
  // reproducible.
  std::string timestamp = "1970-01-01T00:00:00";
};

// Wr:OldText, Wr:OldNote and Wr:NewText carry text.
bool IsPageTextClass(ClassId id);

// Text classes become TextRegions with the transcription as TextEquiv; every
// other class becomes a CustomRegion. All regions record the class label in
// their custom attribute. Corners are rounded half-up to whole pixels.
// Throws Error(kValidationFailed) when the doc fails ValidateDoc().
PageXmlDoc ExportPageXml(const AnnotationDoc& doc, const Ontology& onto);

std::string PageXmlToString(const PageXmlDoc& page,
                            const PageXmlOptions& options = {});

std::string XmlEscape(std::string_view text);

}  // namespace charterlab

#endif  // CHARTERLAB_FORMATS_PAGEXML_H_
