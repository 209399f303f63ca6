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

#include "charterlab/metrics/average_precision.h"

#include <algorithm>
#include <set>

#include "charterlab/core/error.h"
#include "charterlab/metrics/matching.h"

namespace charterlab::metrics {
namespace {

struct Ranked {
  double confidence;
  bool true_positive;
};

}  // namespace

double AllPointsAp(std::span<const double> precision,
                   std::span<const double> recall) {
  if (precision.size() != recall.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "precision and recall lists differ in length");
  }
  std::vector<double> envelope(precision.begin(), precision.end());
  for (std::size_t i = envelope.size(); i-- > 1;) {
    envelope[i - 1] = std::max(envelope[i - 1], envelope[i]);
  }
  double ap = 0.0;
  double previous_recall = 0.0;
  for (std::size_t i = 0; i < envelope.size(); ++i) {
    ap += (recall[i] - previous_recall) * envelope[i];
    previous_recall = recall[i];
  }
  return ap;
}

PRCurve ComputePRCurve(std::span<const ImageScene> scenes, ClassId class_id,
                       double iou_threshold) {
  CheckThreshold(iou_threshold, "IoU threshold");
  PRCurve curve;
  std::vector<Ranked> ranked;
  for (const auto& scene : scenes) {
    std::vector<Detection> dets;
    std::vector<RectAnnotation> gts;
    for (const auto& d : scene.detections) {
      if (d.class_id == class_id) dets.push_back(d);
    }
    for (const auto& g : scene.ground_truth) {
      if (g.class_id == class_id) gts.push_back(g);
    }
    curve.num_ground_truth += static_cast<int>(gts.size());
    const Matching m = MatchDetections(dets, gts, iou_threshold);
    for (std::size_t i = 0; i < dets.size(); ++i) {
      ranked.push_back({dets[i].confidence, m.gt_for_detection[i] != kUnmatched});
    }
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Ranked& a, const Ranked& b) {
                     return a.confidence > b.confidence;
                   });

  int tp = 0;
  int fp = 0;
  for (const auto& r : ranked) {
    (r.true_positive ? tp : fp) += 1;
    curve.precision.push_back(static_cast<double>(tp) / (tp + fp));
    curve.recall.push_back(
        curve.num_ground_truth > 0
            ? static_cast<double>(tp) / curve.num_ground_truth
            : 0.0);
  }
  if (curve.num_ground_truth > 0) {
    curve.ap = AllPointsAp(curve.precision, curve.recall);
  }
  return curve;
}

MeanApReport ComputeMeanAp(std::span<const ImageScene> scenes,
                           double iou_threshold) {
  std::set<ClassId> classes;
  for (const auto& scene : scenes) {
    for (const auto& g : scene.ground_truth) classes.insert(g.class_id);
  }
  if (classes.empty()) {
    throw Error(ErrorCode::kNoGroundTruth,
                "mAP needs at least one ground-truth box");
  }
  MeanApReport report;
  double sum = 0.0;
  for (ClassId c : classes) {
    PRCurve curve = ComputePRCurve(scenes, c, iou_threshold);
    sum += *curve.ap;
    report.per_class.emplace(c, std::move(curve));
  }
  report.map = sum / static_cast<double>(classes.size());
  return report;
}

}  // namespace charterlab::metrics
