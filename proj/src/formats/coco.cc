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

#include "charterlab/formats/coco.h"

#include <cmath>
#include <map>
#include <set>

#include "charterlab/core/error.h"
#include "charterlab/core/validation.h"

namespace charterlab {
namespace {

using nlohmann::json;

// Whole numbers are written without a fractional part so that exported files
// read like any other COCO file.
json Number(double v) {
  if (v == std::floor(v) && std::abs(v) < 9.0e15) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

std::string Supercategory(const std::string& label) {
  const auto colon = label.find(':');
  return colon == std::string::npos ? "none" : label.substr(0, colon);
}

void RequireValid(const AnnotationDoc& doc, const Ontology& onto) {
  const auto violations = ValidateDoc(doc, onto);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorCode::kValidationFailed,
                "doc '" + doc.image_id + "' annotation " +
                    std::to_string(v.index) + ": " + v.message);
  }
}

}  // namespace

json CocoToJson(const CocoBundle& bundle) {
  json images = json::array();
  for (const auto& im : bundle.images) {
    images.push_back({{"id", im.id},
                      {"file_name", im.file_name},
                      {"width", im.width},
                      {"height", im.height}});
  }
  json annotations = json::array();
  for (const auto& a : bundle.annotations) {
    json bbox = json::array();
    for (double v : a.bbox) bbox.push_back(Number(v));
    annotations.push_back({{"id", a.id},
                           {"image_id", a.image_id},
                           {"category_id", a.category_id},
                           {"bbox", bbox},
                           {"area", Number(a.bbox[2] * a.bbox[3])},
                           {"iscrowd", 0}});
  }
  json categories = json::array();
  for (const auto& c : bundle.categories) {
    categories.push_back({{"id", c.id},
                          {"name", c.name},
                          {"supercategory", c.supercategory}});
  }
  return {{"images", images},
          {"annotations", annotations},
          {"categories", categories}};
}

CocoBundle CocoFromJson(const json& object) {
  CocoBundle bundle;
  try {
    for (const auto& im : object.at("images")) {
      bundle.images.push_back({im.at("id").get<std::int64_t>(),
                               im.value("file_name", std::string()),
                               im.at("width").get<int>(),
                               im.at("height").get<int>()});
    }
    for (const auto& a : object.value("annotations", json::array())) {
      CocoAnnotation ann;
      ann.id = a.value("id", std::int64_t{0});
      ann.image_id = a.at("image_id").get<std::int64_t>();
      ann.category_id = a.at("category_id").get<int>();
      const auto& bbox = a.at("bbox");
      if (!bbox.is_array() || bbox.size() != 4) {
        throw Error(ErrorCode::kParse, "COCO bbox must have four numbers");
      }
      for (int k = 0; k < 4; ++k) ann.bbox[k] = bbox[k].get<double>();
      bundle.annotations.push_back(ann);
    }
    for (const auto& c : object.value("categories", json::array())) {
      bundle.categories.push_back({c.at("id").get<int>(),
                                   c.value("name", std::string()),
                                   c.value("supercategory", std::string())});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed COCO file: ") + e.what());
  }
  return bundle;
}

CocoBundle ExportCoco(std::span<const AnnotationDoc> docs,
                      const Ontology& onto) {
  CocoBundle bundle;
  for (int id = 1; id < onto.size(); ++id) {
    const auto& label = onto.Label(static_cast<ClassId>(id));
    bundle.categories.push_back({id, label, Supercategory(label)});
  }

  std::set<std::string> seen;
  std::int64_t next_annotation_id = 1;
  std::int64_t next_image_id = 1;
  for (const auto& doc : docs) {
    if (!seen.insert(doc.image_id).second) {
      throw Error(ErrorCode::kDuplicateImageId,
                  "image id '" + doc.image_id + "' appears twice");
    }
    RequireValid(doc, onto);
    const std::int64_t image_id = next_image_id++;
    bundle.images.push_back(
        {image_id, doc.image_id, doc.image_width, doc.image_height});
    for (const auto& a : doc.annotations) {
      const double x0 = RoundHalfUp(a.rect.left);
      const double y0 = RoundHalfUp(a.rect.top);
      const double x1 = RoundHalfUp(a.rect.right);
      const double y1 = RoundHalfUp(a.rect.bottom);
      if (x1 <= x0 || y1 <= y0) {
        throw Error(ErrorCode::kValidationFailed,
                    "doc '" + doc.image_id +
                        "': box narrower than one pixel after rounding");
      }
      bundle.annotations.push_back({next_annotation_id++, image_id,
                                    ToInt(a.class_id),
                                    {x0, y0, x1 - x0, y1 - y0}});
    }
  }
  return bundle;
}

std::vector<AnnotationDoc> ImportCoco(const CocoBundle& bundle,
                                      const Ontology& onto) {
  std::set<int> categories;
  for (const auto& c : bundle.categories) categories.insert(c.id);

  std::vector<AnnotationDoc> docs;
  std::map<std::int64_t, std::size_t> slot;
  for (const auto& im : bundle.images) {
    if (!slot.emplace(im.id, docs.size()).second) {
      throw Error(ErrorCode::kDuplicateImageId,
                  "COCO image id " + std::to_string(im.id) + " appears twice");
    }
    AnnotationDoc doc;
    doc.image_id = im.file_name;
    doc.image_width = im.width;
    doc.image_height = im.height;
    docs.push_back(std::move(doc));
  }

  for (const auto& a : bundle.annotations) {
    const auto it = slot.find(a.image_id);
    if (it == slot.end()) {
      throw Error(ErrorCode::kMissingImage,
                  "annotation " + std::to_string(a.id) +
                      " references missing image " + std::to_string(a.image_id));
    }
    const ClassId cls = static_cast<ClassId>(a.category_id);
    if (!categories.contains(a.category_id) || !onto.Contains(cls) ||
        cls == ClassId::kNoClass) {
      throw Error(ErrorCode::kUnknownCategory,
                  "unknown category id " + std::to_string(a.category_id));
    }
    RectAnnotation ann;
    ann.rect = {a.bbox[0], a.bbox[1], a.bbox[0] + a.bbox[2],
                a.bbox[1] + a.bbox[3]};
    ann.class_id = cls;
    docs[it->second].annotations.push_back(std::move(ann));
  }
  return docs;
}

}  // namespace charterlab
