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

#ifndef CHARTERLAB_METRICS_REGRESSION_H_
#define CHARTERLAB_METRICS_REGRESSION_H_

#include <optional>
#include <span>
#include <vector>

namespace charterlab::metrics {

// Mean squared difference. Throws Error(kLengthMismatch) or Error(kEmptyInput).
double Mse(std::span<const double> pred, std::span<const double> gt);

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> AverageRanks(std::span<const double> values);

// Pearson correlation of AverageRanks(pred) and AverageRanks(gt).
// Throws Error(kLengthMismatch), or Error(kDegenerateInput) for fewer than two
// samples or when either side is constant.
double Spearman(std::span<const double> pred, std::span<const double> gt);

struct GrowthPoint {
  int n_included = 0;
  double mse = 0.0;
  // Empty when the first n samples are constant on either side.
  std::optional<double> spearman;
};

struct RegressionEvalReport {
  double mse = 0.0;
  std::optional<double> spearman;
  // n = 2..N over the samples sorted by ascending squared error, i.e.
  // outliers are added last.
  std::vector<GrowthPoint> growth;
};

RegressionEvalReport InlierGrowthCurves(std::span<const double> pred,
                                        std::span<const double> gt);

}  // namespace charterlab::metrics

#endif  // CHARTERLAB_METRICS_REGRESSION_H_
