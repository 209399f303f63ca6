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

#ifndef CHARTERLAB_RESOLUTION_RESOLUTION_H_
#define CHARTERLAB_RESOLUTION_RESOLUTION_H_

#include <optional>
#include <string_view>
#include <vector>

#include "charterlab/core/annotation.h"
#include "charterlab/core/rect.h"

// Physical resolution of the photographed plane, in pixels per centimetre
// (PpCm). Conversion to DPI (x 2.54) is left to presentation code.
namespace charterlab::resolution {

enum class Method { kCalibrationCard, kDiagonalMark, kRegressor };

std::string_view MethodName(Method method);

struct ResolutionEstimate {
  double ppcm = 0.0;
  Method method = Method::kCalibrationCard;
  // Plausible range of the true PpCm; [ppcm, ppcm] until WithInterval().
  double low = 0.0;
  double high = 0.0;
  // Set when the input looked implausible (e.g. a near-square card box).
  bool warning = false;
};

struct CalibrationCardSpec {
  // Kodak-style cards measure 20.5 cm along their long side.
  double length_cm = 20.5;
};

// Camera field of view in degrees, in [0, 180).
class ViewAngle {
 public:
  // Throws Error(kInvalidArgument) outside [0, 180).
  explicit ViewAngle(double degrees);

  double degrees() const { return degrees_; }
  double radians() const;

 private:
  double degrees_;
};

// Cards below this long/short side ratio trigger the warning flag.
inline constexpr double kMinCardAspect = 2.0;

// The long side of the card's box spans spec.length_cm.
ResolutionEstimate PpcmFromCalibrationBox(const Rect& card,
                                          const CalibrationCardSpec& spec = {});

// The box diagonal spans diagonal_cm. Throws Error(kNonPositiveDiagonal) when
// diagonal_cm <= 0 and Error(kInvalidArgument) for an invalid rect.
ResolutionEstimate PpcmFromDiagonalMark(const Rect& mark, double diagonal_cm);

// 1 - cos(phi/2): how far below the card-edge estimate the true resolution
// can lie when the card sits at the edge of the field of view.
double PerspectiveErrorBound(ViewAngle phi);

// Sets [low, high] = [ppcm * cos(phi/2), ppcm]. Throws Error(kInvalidArgument)
// when est.ppcm is not positive.
ResolutionEstimate WithInterval(ResolutionEstimate est, ViewAngle phi);

struct ImageResolution {
  std::vector<ResolutionEstimate> per_card;
  // Mean of the per-card values, with its own interval; empty when the doc
  // has no calibration card.
  std::optional<ResolutionEstimate> combined;
};

// Applies PpcmFromCalibrationBox() to every Img:CalibrationCard annotation.
ImageResolution EstimateFromCards(const AnnotationDoc& doc, ViewAngle phi,
                                  const CalibrationCardSpec& spec = {});

}  // namespace charterlab::resolution

#endif  // CHARTERLAB_RESOLUTION_RESOLUTION_H_
