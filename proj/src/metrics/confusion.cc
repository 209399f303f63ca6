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

#include "charterlab/metrics/confusion.h"

#include <string>

#include "charterlab/core/error.h"
#include "charterlab/metrics/matching.h"

namespace charterlab::metrics {

ConfusionMatrix::ConfusionMatrix(int num_classes)
    : num_classes_(num_classes) {
  if (num_classes <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one class");
  }
  counts_.assign(static_cast<std::size_t>(num_classes + 1) * (num_classes + 1),
                 0);
}

long ConfusionMatrix::at(int gt_row, int det_col) const {
  return counts_.at(static_cast<std::size_t>(gt_row) * (num_classes_ + 1) +
                    det_col);
}

void ConfusionMatrix::Increment(int gt_row, int det_col) {
  if (gt_row < 0 || gt_row > num_classes_ || det_col < 0 ||
      det_col > num_classes_) {
    throw Error(ErrorCode::kInvalidArgument, "confusion cell out of range");
  }
  ++counts_[static_cast<std::size_t>(gt_row) * (num_classes_ + 1) + det_col];
}

long ConfusionMatrix::RowSum(int gt_row) const {
  long sum = 0;
  for (int c = 0; c <= num_classes_; ++c) sum += at(gt_row, c);
  return sum;
}

long ConfusionMatrix::ColumnSum(int det_col) const {
  long sum = 0;
  for (int r = 0; r <= num_classes_; ++r) sum += at(r, det_col);
  return sum;
}

ConfusionMatrix ComputeConfusion(std::span<const ImageScene> scenes,
                                 int num_classes, double iou_threshold,
                                 double conf_threshold) {
  CheckThreshold(iou_threshold, "IoU threshold");
  CheckThreshold(conf_threshold, "confidence threshold");
  ConfusionMatrix matrix(num_classes);
  const auto class_index = [num_classes](ClassId id) {
    const int v = ToInt(id);
    if (v < 0 || v >= num_classes) {
      throw Error(ErrorCode::kInvalidArgument,
                  "class id " + std::to_string(v) + " outside the matrix");
    }
    return v;
  };

  for (const auto& scene : scenes) {
    std::vector<Detection> kept;
    for (const auto& d : scene.detections) {
      if (d.confidence >= conf_threshold) kept.push_back(d);
    }
    const Matching m = MatchDetections(kept, scene.ground_truth, iou_threshold,
                                       MatchPolicy::kClassAgnostic);
    for (std::size_t g = 0; g < scene.ground_truth.size(); ++g) {
      const int row = class_index(scene.ground_truth[g].class_id);
      const int d = m.detection_for_gt[g];
      matrix.Increment(row, d == kUnmatched ? matrix.background()
                                            : class_index(kept[d].class_id));
    }
    for (std::size_t d = 0; d < kept.size(); ++d) {
      if (m.gt_for_detection[d] == kUnmatched) {
        matrix.Increment(matrix.background(), class_index(kept[d].class_id));
      }
    }
  }
  return matrix;
}

}  // namespace charterlab::metrics
