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

#include "charterlab/core/annotation.h"

#include <fstream>
#include <sstream>

#include "charterlab/core/error.h"

namespace charterlab {
namespace {

using nlohmann::json;

constexpr const char* kAnnotationFields[] = {
    "left", "top", "right", "bottom", "class", "transcription", "comment"};
constexpr const char* kDocFields[] = {"schema_version", "image_id", "width",
                                      "height", "annotations"};

template <std::size_t N>
json Remainder(const json& object, const char* const (&known)[N]) {
  json rest = json::object();
  for (const auto& [key, value] : object.items()) {
    bool is_known = false;
    for (const char* k : known) is_known = is_known || key == k;
    if (!is_known) rest[key] = value;
  }
  return rest;
}

std::optional<std::string> OptionalString(const json& object,
                                          const char* key) {
  if (!object.contains(key) || object.at(key).is_null()) return std::nullopt;
  return object.at(key).get<std::string>();
}

json OptionalToJson(const std::optional<std::string>& value) {
  return value ? json(*value) : json(nullptr);
}

double Coordinate(const json& object, const char* key) {
  const json& v = object.at(key);
  if (!v.is_number()) {
    throw Error(ErrorCode::kParse, std::string("'") + key + "' must be a number");
  }
  return v.get<double>();
}

}  // namespace

json RectToJson(const Rect& rect) {
  return {{"left", rect.left},
          {"top", rect.top},
          {"right", rect.right},
          {"bottom", rect.bottom}};
}

Rect RectFromJson(const json& object) {
  try {
    return Rect{Coordinate(object, "left"), Coordinate(object, "top"),
                Coordinate(object, "right"), Coordinate(object, "bottom")};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed rect: ") + e.what());
  }
}

json DocToJson(const AnnotationDoc& doc) {
  json annotations = json::array();
  for (const auto& a : doc.annotations) {
    json entry = a.extra.is_object() ? a.extra : json::object();
    entry.update(RectToJson(a.rect));
    entry["class"] = ToInt(a.class_id);
    entry["transcription"] = OptionalToJson(a.transcription);
    entry["comment"] = OptionalToJson(a.comment);
    annotations.push_back(std::move(entry));
  }
  json out = doc.extra.is_object() ? doc.extra : json::object();
  out["schema_version"] = doc.schema_version;
  out["image_id"] = doc.image_id;
  out["width"] = doc.image_width;
  out["height"] = doc.image_height;
  out["annotations"] = std::move(annotations);
  return out;
}

AnnotationDoc DocFromJson(const json& object) {
  if (!object.is_object()) {
    throw Error(ErrorCode::kParse, "annotation document must be an object");
  }
  AnnotationDoc doc;
  try {
    doc.schema_version = object.value("schema_version",
                                      AnnotationDoc::kSchemaVersion);
    doc.image_id = object.at("image_id").get<std::string>();
    doc.image_width = object.at("width").get<int>();
    doc.image_height = object.at("height").get<int>();
    const json& annotations = object.value("annotations", json::array());
    if (!annotations.is_array()) {
      throw Error(ErrorCode::kParse, "'annotations' must be an array");
    }
    for (const auto& entry : annotations) {
      if (!entry.is_object()) {
        throw Error(ErrorCode::kParse, "annotation must be an object");
      }
      RectAnnotation a;
      a.rect = RectFromJson(entry);
      a.class_id = static_cast<ClassId>(entry.at("class").get<int>());
      a.transcription = OptionalString(entry, "transcription");
      a.comment = OptionalString(entry, "comment");
      a.extra = Remainder(entry, kAnnotationFields);
      doc.annotations.push_back(std::move(a));
    }
    doc.extra = Remainder(object, kDocFields);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse,
                std::string("malformed annotation document: ") + e.what());
  }
  return doc;
}

std::string SerializeDoc(const AnnotationDoc& doc) {
  return DocToJson(doc).dump(2) + "\n";
}

AnnotationDoc ParseDoc(std::string_view text) {
  json object;
  try {
    object = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return DocFromJson(object);
}

AnnotationDoc LoadDoc(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseDoc(buffer.str());
}

void SaveDoc(const std::filesystem::path& path, const AnnotationDoc& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  }
  out << SerializeDoc(doc);
}

}  // namespace charterlab
