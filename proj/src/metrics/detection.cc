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

#include "charterlab/metrics/detection.h"

#include <cmath>
#include <map>

#include "charterlab/core/error.h"

namespace charterlab::metrics {

using nlohmann::json;

double Iou(const Rect& a, const Rect& b) {
  const double inter = IntersectionArea(a, b);
  if (inter <= 0.0) return 0.0;
  return inter / (a.area() + b.area() - inter);
}

std::vector<ImageScene> ScenesFromCoco(const CocoBundle& ground_truth,
                                       const json& predictions,
                                       const Ontology& onto) {
  const auto docs = ImportCoco(ground_truth, onto);
  std::vector<ImageScene> scenes;
  std::map<std::int64_t, std::size_t> slot;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    slot[ground_truth.images[i].id] = i;
    scenes.push_back({docs[i].image_id, docs[i].annotations, {}});
  }

  if (!predictions.is_array()) {
    throw Error(ErrorCode::kParse, "predictions must be a JSON array");
  }
  try {
    for (const auto& p : predictions) {
      const auto image_id = p.at("image_id").get<std::int64_t>();
      const auto it = slot.find(image_id);
      if (it == slot.end()) {
        throw Error(ErrorCode::kMissingImage,
                    "prediction for unknown image " + std::to_string(image_id));
      }
      const ClassId cls = static_cast<ClassId>(p.at("category_id").get<int>());
      if (!onto.Contains(cls) || cls == ClassId::kNoClass) {
        throw Error(ErrorCode::kUnknownCategory,
                    "prediction with unknown category " +
                        std::to_string(ToInt(cls)));
      }
      const auto& bbox = p.at("bbox");
      if (!bbox.is_array() || bbox.size() != 4) {
        throw Error(ErrorCode::kParse, "prediction bbox must have four numbers");
      }
      const double x = bbox[0].get<double>();
      const double y = bbox[1].get<double>();
      const double score = p.at("score").get<double>();
      if (!(score >= 0.0 && score <= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "prediction score outside [0, 1]");
      }
      const Rect rect{x, y, x + bbox[2].get<double>(), y + bbox[3].get<double>()};
      if (!rect.IsValid()) {
        throw Error(ErrorCode::kInvalidArgument, "prediction with invalid box");
      }
      scenes[it->second].detections.push_back({rect, cls, score});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse,
                std::string("malformed predictions: ") + e.what());
  }
  return scenes;
}

json DetectionsToCocoResults(const std::vector<ImageScene>& scenes,
                             const CocoBundle& ground_truth) {
  if (scenes.size() != ground_truth.images.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "one scene per ground-truth image is required");
  }
  json out = json::array();
  for (std::size_t i = 0; i < scenes.size(); ++i) {
    for (const auto& d : scenes[i].detections) {
      out.push_back({{"image_id", ground_truth.images[i].id},
                     {"category_id", ToInt(d.class_id)},
                     {"bbox", {d.rect.left, d.rect.top, d.rect.width(),
                               d.rect.height()}},
                     {"score", d.confidence}});
    }
  }
  return out;
}

}  // namespace charterlab::metrics
