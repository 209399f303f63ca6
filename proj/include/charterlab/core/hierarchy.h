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

#ifndef CHARTERLAB_CORE_HIERARCHY_H_
#define CHARTERLAB_CORE_HIERARCHY_H_

#include <vector>

#include "charterlab/core/annotation.h"

namespace charterlab {

// Parent links over the annotations of one doc. Node i is annotation i;
// kRoot stands for the image itself.
class HierarchyTree {
 public:
  static constexpr int kRoot = -1;

  explicit HierarchyTree(std::vector<int> parents)
      : parents_(std::move(parents)) {}

  int size() const { return static_cast<int>(parents_.size()); }
  int parent(int node) const { return parents_.at(node); }
  // Children of `node` (or of the image when node == kRoot), ascending.
  std::vector<int> children(int node) const;

 private:
  std::vector<int> parents_;
};

// Calibration cards, seals and writable areas hang off the image.
bool AttachesToImage(ClassId id);

// The containment structure suggested by the class names. Classes other than
// those attaching to the image go under the writable area they overlap most,
// ties resolved by lower annotation index, or under the image when they
// overlap none. Nothing is enforced; this is a read-only interpretation.
HierarchyTree ImpliedHierarchy(const AnnotationDoc& doc);

}  // namespace charterlab

#endif  // CHARTERLAB_CORE_HIERARCHY_H_
