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

#ifndef CHARTERLAB_METRICS_CONFUSION_H_
#define CHARTERLAB_METRICS_CONFUSION_H_

#include <span>
#include <vector>

#include "charterlab/metrics/detection.h"

namespace charterlab::metrics {

inline constexpr double kDefaultConfidenceThreshold = 0.25;

// (K+1) x (K+1) counts. Rows are ground-truth classes, columns detected
// classes; index K is the background row/column (spurious detections sit in
// row K, missed ground truth in column K).
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(int num_classes);

  int num_classes() const { return num_classes_; }
  int background() const { return num_classes_; }

  long at(int gt_row, int det_col) const;
  void Increment(int gt_row, int det_col);

  long RowSum(int gt_row) const;
  long ColumnSum(int det_col) const;

  friend bool operator==(const ConfusionMatrix&,
                         const ConfusionMatrix&) = default;

 private:
  int num_classes_;
  std::vector<long> counts_;
};

// Drops detections below conf_threshold, matches the rest class-agnostically
// (see MatchDetections) and tallies (gt class, detected class) per pair,
// (gt class, background) per missed box and (background, det class) per
// unmatched detection. Throws Error(kInvalidArgument) for thresholds outside
// (0, 1] or class ids outside [0, num_classes).
ConfusionMatrix ComputeConfusion(
    std::span<const ImageScene> scenes, int num_classes, double iou_threshold,
    double conf_threshold = kDefaultConfidenceThreshold);

}  // namespace charterlab::metrics

#endif  // CHARTERLAB_METRICS_CONFUSION_H_
