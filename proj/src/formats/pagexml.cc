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

#include "charterlab/formats/pagexml.h"

#include <sstream>

#include "charterlab/core/error.h"
#include "charterlab/core/validation.h"

namespace charterlab {
namespace {

std::string TextType(ClassId id) {
  switch (id) {
    case ClassId::kOldText: return "paragraph";
    case ClassId::kOldNote: return "marginalia";
    default: return "other";
  }
}

std::string Points(const std::array<PagePoint, 4>& polygon) {
  std::string out;
  for (const auto& p : polygon) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p.x) + "," + std::to_string(p.y);
  }
  return out;
}

}  // namespace

bool IsPageTextClass(ClassId id) {
  return id == ClassId::kOldText || id == ClassId::kOldNote ||
         id == ClassId::kNewText;
}

std::string XmlEscape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

PageXmlDoc ExportPageXml(const AnnotationDoc& doc, const Ontology& onto) {
  const auto violations = ValidateDoc(doc, onto);
  if (!violations.empty()) {
    throw Error(ErrorCode::kValidationFailed,
                "doc '" + doc.image_id + "': " + violations.front().message);
  }
  PageXmlDoc page{doc.image_id, doc.image_width, doc.image_height, {}};
  for (std::size_t i = 0; i < doc.annotations.size(); ++i) {
    const auto& a = doc.annotations[i];
    const long l = static_cast<long>(RoundHalfUp(a.rect.left));
    const long t = static_cast<long>(RoundHalfUp(a.rect.top));
    const long r = static_cast<long>(RoundHalfUp(a.rect.right));
    const long b = static_cast<long>(RoundHalfUp(a.rect.bottom));

    PageRegion region;
    region.id = "r" + std::to_string(i);
    region.class_label = onto.Label(a.class_id);
    region.polygon = {PagePoint{l, t}, PagePoint{r, t}, PagePoint{r, b},
                      PagePoint{l, b}};
    region.comment = a.comment;
    if (IsPageTextClass(a.class_id)) {
      region.kind = PageRegion::Kind::kText;
      region.text_type = TextType(a.class_id);
      region.text = a.transcription;
    }
    page.regions.push_back(std::move(region));
  }
  return page;
}

std::string PageXmlToString(const PageXmlDoc& page,
                            const PageXmlOptions& options) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<PcGts xmlns=\"" << kPageXmlNamespace << "\""
      << " xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\""
      << " xsi:schemaLocation=\"" << kPageXmlNamespace << " "
      << kPageXmlNamespace << "/pagecontent.xsd\">\n"
      << "  <Metadata>\n"
      << "    <Creator>" << XmlEscape(options.creator) << "</Creator>\n"
      << "    <Created>" << XmlEscape(options.timestamp) << "</Created>\n"
      << "    <LastChange>" << XmlEscape(options.timestamp) << "</LastChange>\n"
      << "  </Metadata>\n"
      << "  <Page imageFilename=\"" << XmlEscape(page.image_filename)
      << "\" imageWidth=\"" << page.image_width << "\" imageHeight=\""
      << page.image_height << "\">\n";
  for (const auto& region : page.regions) {
    const bool text = region.kind == PageRegion::Kind::kText;
    const char* element = text ? "TextRegion" : "CustomRegion";
    out << "    <" << element << " id=\"" << XmlEscape(region.id) << "\""
        << " type=\"" << XmlEscape(text ? region.text_type : region.class_label)
        << "\"";
    if (region.comment) {
      out << " comments=\"" << XmlEscape(*region.comment) << "\"";
    }
    out << " custom=\"structure {type:" << XmlEscape(region.class_label)
        << ";}\">\n"
        << "      <Coords points=\"" << Points(region.polygon) << "\"/>\n";
    if (text && region.text) {
      out << "      <TextEquiv>\n"
          << "        <Unicode>" << XmlEscape(*region.text) << "</Unicode>\n"
          << "      </TextEquiv>\n";
    }
    out << "    </" << element << ">\n";
  }
  out << "  </Page>\n"
      << "</PcGts>\n";
  return out.str();
}

}  // namespace charterlab
