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

#include "charterlab/metrics/matching.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "charterlab/core/error.h"

namespace charterlab::metrics {

void CheckThreshold(double value, const char* name) {
  if (!(value > 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " must lie in (0, 1]");
  }
}

std::vector<int> ConfidenceOrder(std::span<const Detection> detections) {
  std::vector<int> order(detections.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return detections[a].confidence > detections[b].confidence;
  });
  return order;
}

Matching MatchDetections(std::span<const Detection> detections,
                         std::span<const RectAnnotation> ground_truth,
                         double iou_threshold, MatchPolicy policy) {
  CheckThreshold(iou_threshold, "IoU threshold");
  Matching m{std::vector<int>(detections.size(), kUnmatched),
             std::vector<int>(ground_truth.size(), kUnmatched)};
  for (int d : ConfidenceOrder(detections)) {
    int best = kUnmatched;
    double best_iou = -1.0;
    for (int g = 0; g < static_cast<int>(ground_truth.size()); ++g) {
      if (m.detection_for_gt[g] != kUnmatched) continue;
      if (policy == MatchPolicy::kSameClass &&
          ground_truth[g].class_id != detections[d].class_id) {
        continue;
      }
      const double overlap = Iou(detections[d].rect, ground_truth[g].rect);
      if (overlap >= iou_threshold && overlap > best_iou) {
        best = g;
        best_iou = overlap;
      }
    }
    if (best != kUnmatched) {
      m.gt_for_detection[d] = best;
      m.detection_for_gt[best] = d;
    }
  }
  return m;
}

}  // namespace charterlab::metrics
