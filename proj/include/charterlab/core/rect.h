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

#ifndef CHARTERLAB_CORE_RECT_H_
#define CHARTERLAB_CORE_RECT_H_

#include <vector>

namespace charterlab {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Axis-aligned rectangle in image pixel coordinates, origin top-left.
//
// A Rect is a plain value: it may hold coordinates that break the invariants
// (documents read from disk are validated after the fact). Use IsValid() or
// MakeRect() when a well-formed rectangle is required.
struct Rect {
  double left = 0.0;
  double top = 0.0;
  double right = 0.0;
  double bottom = 0.0;

  double width() const { return right - left; }
  double height() const { return bottom - top; }
  double area() const { return width() * height(); }

  // left < right, top < bottom, all coordinates finite and >= 0.
  bool IsValid() const;

  // True when `other` lies inside this rect (boundaries inclusive).
  bool Contains(const Rect& other) const;

  friend bool operator==(const Rect&, const Rect&) = default;
};

// Rounds to the nearest integer, halves away from negative infinity
// (2.5 -> 3, -2.5 -> -2). Applied to coordinates only when exporting to
// integer-pixel formats.
double RoundHalfUp(double value);

// Builds the rectangle spanned by a drag between two corners, in either
// direction. Throws Error(kDegenerateRect) when the corners share an x or a
// y coordinate, and Error(kInvalidArgument) for negative or non-finite input.
Rect MakeRect(Point p1, Point p2);

// Area of the overlap of `a` and `b`; 0 when they are disjoint or only touch.
double IntersectionArea(const Rect& a, const Rect& b);

// Bounding-box union: the smallest rect containing both inputs.
Rect RectUnion(const Rect& a, const Rect& b);

// `a` minus the interior of `b`, as at most four pairwise-disjoint strips
// emitted in the order top, bottom, left, right. Returns {a} when the two do
// not overlap with positive area and {} when `b` covers `a`.
std::vector<Rect> RectSubtract(const Rect& a, const Rect& b);

}  // namespace charterlab

#endif  // CHARTERLAB_CORE_RECT_H_
