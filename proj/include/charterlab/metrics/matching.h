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

#ifndef CHARTERLAB_METRICS_MATCHING_H_
#define CHARTERLAB_METRICS_MATCHING_H_

#include <span>
#include <vector>

#include "charterlab/core/annotation.h"
#include "charterlab/metrics/detection.h"

namespace charterlab::metrics {

inline constexpr int kUnmatched = -1;

struct Matching {
  std::vector<int> gt_for_detection;   // per detection, kUnmatched or gt index
  std::vector<int> detection_for_gt;   // per ground truth
};

enum class MatchPolicy {
  kClassAgnostic,  // any detection may claim any ground truth
  kSameClass,      // only equal class ids may pair
};

// Greedy matching. Detections are visited by descending confidence (equal
// confidences in index order); each claims the still-unmatched ground truth
// with the highest IoU >= iou_threshold, the lowest index winning ties.
// Throws Error(kInvalidArgument) unless 0 < iou_threshold <= 1.
Matching MatchDetections(std::span<const Detection> detections,
                         std::span<const RectAnnotation> ground_truth,
                         double iou_threshold,
                         MatchPolicy policy = MatchPolicy::kClassAgnostic);

// Indices of `detections` in visiting order.
std::vector<int> ConfidenceOrder(std::span<const Detection> detections);

void CheckThreshold(double value, const char* name);

}  // namespace charterlab::metrics

#endif  // CHARTERLAB_METRICS_MATCHING_H_
