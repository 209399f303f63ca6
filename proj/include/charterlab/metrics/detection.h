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

#ifndef CHARTERLAB_METRICS_DETECTION_H_
#define CHARTERLAB_METRICS_DETECTION_H_

#include <string>
#include <vector>

#include "charterlab/core/annotation.h"
#include "charterlab/core/ontology.h"
#include "charterlab/core/rect.h"
#include "charterlab/formats/coco.h"
#include "json.hpp"

namespace charterlab::metrics {

struct Detection {
  Rect rect;
  ClassId class_id = ClassId::kNoClass;
  double confidence = 0.0;
};

// Ground truth and predictions for one image. Matching never crosses images.
struct ImageScene {
  std::string image_id;
  std::vector<RectAnnotation> ground_truth;
  std::vector<Detection> detections;
};

// Intersection over union; 0 for disjoint or touching rects.
double Iou(const Rect& a, const Rect& b);

// Builds one scene per ground-truth image from a COCO ground-truth bundle and
// a COCO results array ([{"image_id", "category_id", "bbox", "score"}, ...]).
//
// Throws Error(kMissingImage) for predictions on unknown images,
// Error(kUnknownCategory) for categories outside the ontology, and
// Error(kParse) / Error(kInvalidArgument) for malformed entries or scores
// outside [0, 1].
std::vector<ImageScene> ScenesFromCoco(const CocoBundle& ground_truth,
                                       const nlohmann::json& predictions,
                                       const Ontology& onto);

nlohmann::json DetectionsToCocoResults(const std::vector<ImageScene>& scenes,
                                       const CocoBundle& ground_truth);

}  // namespace charterlab::metrics

#endif  // CHARTERLAB_METRICS_DETECTION_H_
