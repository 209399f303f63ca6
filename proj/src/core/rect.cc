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

#include "charterlab/core/rect.h"

#include <algorithm>
#include <cmath>

#include "charterlab/core/error.h"

namespace charterlab {

bool Rect::IsValid() const {
  for (double v : {left, top, right, bottom}) {
    if (!std::isfinite(v) || v < 0.0) return false;
  }
  return left < right && top < bottom;
}

bool Rect::Contains(const Rect& other) const {
  return left <= other.left && top <= other.top && right >= other.right &&
         bottom >= other.bottom;
}

double RoundHalfUp(double value) { return std::floor(value + 0.5); }

Rect MakeRect(Point p1, Point p2) {
  for (double v : {p1.x, p1.y, p2.x, p2.y}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "rectangle corners must be finite and non-negative");
    }
  }
  Rect r{std::min(p1.x, p2.x), std::min(p1.y, p2.y), std::max(p1.x, p2.x),
         std::max(p1.y, p2.y)};
  if (r.left == r.right || r.top == r.bottom) {
    throw Error(ErrorCode::kDegenerateRect,
                "rectangle corners coincide on one axis");
  }
  return r;
}

double IntersectionArea(const Rect& a, const Rect& b) {
  const double w = std::min(a.right, b.right) - std::max(a.left, b.left);
  const double h = std::min(a.bottom, b.bottom) - std::max(a.top, b.top);
  if (w <= 0.0 || h <= 0.0) return 0.0;
  return w * h;
}

Rect RectUnion(const Rect& a, const Rect& b) {
  return Rect{std::min(a.left, b.left), std::min(a.top, b.top),
              std::max(a.right, b.right), std::max(a.bottom, b.bottom)};
}

std::vector<Rect> RectSubtract(const Rect& a, const Rect& b) {
  const Rect cut{std::max(a.left, b.left), std::max(a.top, b.top),
                 std::min(a.right, b.right), std::min(a.bottom, b.bottom)};
  if (cut.left >= cut.right || cut.top >= cut.bottom) return {a};

  std::vector<Rect> pieces;
  pieces.reserve(4);
  // Top and bottom strips span the full width of `a`; left and right strips
  // only cover the rows of the cut.
  if (cut.top > a.top) pieces.push_back({a.left, a.top, a.right, cut.top});
  if (cut.bottom < a.bottom) {
    pieces.push_back({a.left, cut.bottom, a.right, a.bottom});
  }
  if (cut.left > a.left) pieces.push_back({a.left, cut.top, cut.left, cut.bottom});
  if (cut.right < a.right) {
    pieces.push_back({cut.right, cut.top, a.right, cut.bottom});
  }
  return pieces;
}

}  // namespace charterlab
