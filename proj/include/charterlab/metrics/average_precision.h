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

#ifndef CHARTERLAB_METRICS_AVERAGE_PRECISION_H_
#define CHARTERLAB_METRICS_AVERAGE_PRECISION_H_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "charterlab/metrics/detection.h"

namespace charterlab::metrics {

// Precision and recall after each ranked detection of one class.
struct PRCurve {
  std::vector<double> precision;
  std::vector<double> recall;
  int num_ground_truth = 0;
  // Area under the precision envelope over all recall points. Empty when the
  // class has no ground truth, in which case AP is undefined.
  std::optional<double> ap;
};

// Ranked PR sweep for one class over all scenes, with same-class greedy
// matching inside each scene. Detections are ranked by descending confidence;
// ties keep scene order, then detection order.
PRCurve ComputePRCurve(std::span<const ImageScene> scenes, ClassId class_id,
                       double iou_threshold);

// Area under the running-maximum precision envelope (all-points
// interpolation). `precision` and `recall` must have equal length.
double AllPointsAp(std::span<const double> precision,
                   std::span<const double> recall);

struct MeanApReport {
  double map = 0.0;
  // Every class with at least one ground-truth box.
  std::map<ClassId, PRCurve> per_class;
};

// Unweighted mean of per-class AP over classes that have ground truth.
// Throws Error(kNoGroundTruth) when no scene has any ground truth.
MeanApReport ComputeMeanAp(std::span<const ImageScene> scenes,
                           double iou_threshold);

}  // namespace charterlab::metrics

#endif  // CHARTERLAB_METRICS_AVERAGE_PRECISION_H_
