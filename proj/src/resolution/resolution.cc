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

#include "charterlab/resolution/resolution.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "charterlab/core/error.h"

namespace charterlab::resolution {

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kCalibrationCard: return "calibration-card";
    case Method::kDiagonalMark: return "diagonal-mark";
    case Method::kRegressor: return "regressor";
  }
  return "unknown";
}

ViewAngle::ViewAngle(double degrees) : degrees_(degrees) {
  if (!(degrees >= 0.0 && degrees < 180.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "view angle must lie in [0, 180) degrees");
  }
}

double ViewAngle::radians() const { return degrees_ * std::numbers::pi / 180.0; }

ResolutionEstimate PpcmFromCalibrationBox(const Rect& card,
                                          const CalibrationCardSpec& spec) {
  if (!card.IsValid()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid calibration card box");
  }
  if (!(spec.length_cm > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "card length must be positive");
  }
  const double long_side = std::max(card.width(), card.height());
  const double short_side = std::min(card.width(), card.height());
  const double ppcm = long_side / spec.length_cm;
  return {ppcm, Method::kCalibrationCard, ppcm, ppcm,
          long_side / short_side < kMinCardAspect};
}

ResolutionEstimate PpcmFromDiagonalMark(const Rect& mark, double diagonal_cm) {
  if (!(diagonal_cm > 0.0)) {
    throw Error(ErrorCode::kNonPositiveDiagonal,
                "diagonal length must be positive");
  }
  if (!mark.IsValid()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid diagonal mark box");
  }
  const double ppcm = std::hypot(mark.width(), mark.height()) / diagonal_cm;
  return {ppcm, Method::kDiagonalMark, ppcm, ppcm, false};
}

double PerspectiveErrorBound(ViewAngle phi) {
  return 1.0 - std::cos(phi.radians() / 2.0);
}

ResolutionEstimate WithInterval(ResolutionEstimate est, ViewAngle phi) {
  if (!(est.ppcm > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "PpCm must be positive");
  }
  est.low = est.ppcm * std::cos(phi.radians() / 2.0);
  est.high = est.ppcm;
  return est;
}

ImageResolution EstimateFromCards(const AnnotationDoc& doc, ViewAngle phi,
                                  const CalibrationCardSpec& spec) {
  ImageResolution out;
  for (const auto& a : doc.annotations) {
    if (a.class_id != ClassId::kCalibrationCard) continue;
    out.per_card.push_back(
        WithInterval(PpcmFromCalibrationBox(a.rect, spec), phi));
  }
  if (out.per_card.empty()) return out;

  ResolutionEstimate mean;
  for (const auto& e : out.per_card) {
    mean.ppcm += e.ppcm;
    mean.warning = mean.warning || e.warning;
  }
  mean.ppcm /= static_cast<double>(out.per_card.size());
  out.combined = WithInterval(mean, phi);
  return out;
}

}  // namespace charterlab::resolution
