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

#include "charterlab/core/hierarchy.h"

namespace charterlab {

std::vector<int> HierarchyTree::children(int node) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (parents_[i] == node) out.push_back(i);
  }
  return out;
}

bool AttachesToImage(ClassId id) {
  return id == ClassId::kCalibrationCard || id == ClassId::kSeal ||
         id == ClassId::kWritableArea;
}

HierarchyTree ImpliedHierarchy(const AnnotationDoc& doc) {
  const auto& anns = doc.annotations;
  std::vector<int> areas;
  for (int i = 0; i < static_cast<int>(anns.size()); ++i) {
    if (anns[i].class_id == ClassId::kWritableArea) areas.push_back(i);
  }

  std::vector<int> parents(anns.size(), HierarchyTree::kRoot);
  for (int i = 0; i < static_cast<int>(anns.size()); ++i) {
    if (AttachesToImage(anns[i].class_id)) continue;
    double best = 0.0;
    for (int area : areas) {
      const double overlap = IntersectionArea(anns[i].rect, anns[area].rect);
      if (overlap > best) {
        best = overlap;
        parents[i] = area;
      }
    }
  }
  return HierarchyTree(std::move(parents));
}

}  // namespace charterlab
