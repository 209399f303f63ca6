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

#include "charterlab/metrics/regression.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "charterlab/core/error.h"

namespace charterlab::metrics {
namespace {

void CheckPairs(std::span<const double> pred, std::span<const double> gt) {
  if (pred.size() != gt.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "prediction and ground-truth lists differ in length");
  }
  if (pred.empty()) throw Error(ErrorCode::kEmptyInput, "no samples");
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (!std::isfinite(pred[i]) || !std::isfinite(gt[i])) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite sample value");
    }
  }
}

bool IsConstant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; });
}

double Pearson(std::span<const double> a, std::span<const double> b) {
  const double n = static_cast<double>(a.size());
  const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double cov = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  return cov / std::sqrt(var_a * var_b);
}

std::optional<double> SpearmanOrEmpty(std::span<const double> pred,
                                      std::span<const double> gt) {
  if (pred.size() < 2 || IsConstant(pred) || IsConstant(gt)) {
    return std::nullopt;
  }
  return Pearson(AverageRanks(pred), AverageRanks(gt));
}

}  // namespace

double Mse(std::span<const double> pred, std::span<const double> gt) {
  CheckPairs(pred, gt);
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = pred[i] - gt[i];
    sum += d * d;
  }
  return sum / static_cast<double>(pred.size());
}

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share ranks i+1..j+1.
    const double shared = (static_cast<double>(i + j) + 2.0) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

double Spearman(std::span<const double> pred, std::span<const double> gt) {
  if (pred.size() != gt.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "prediction and ground-truth lists differ in length");
  }
  if (!pred.empty()) CheckPairs(pred, gt);
  const auto rho = SpearmanOrEmpty(pred, gt);
  if (!rho) {
    throw Error(ErrorCode::kDegenerateInput,
                "Spearman needs two or more samples, not all equal");
  }
  return *rho;
}

RegressionEvalReport InlierGrowthCurves(std::span<const double> pred,
                                        std::span<const double> gt) {
  CheckPairs(pred, gt);
  const std::size_t n = pred.size();
  std::vector<double> squared(n);
  for (std::size_t i = 0; i < n; ++i) {
    squared[i] = (pred[i] - gt[i]) * (pred[i] - gt[i]);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return squared[a] < squared[b];
  });
  std::vector<double> sorted_pred(n);
  std::vector<double> sorted_gt(n);
  for (std::size_t i = 0; i < n; ++i) {
    sorted_pred[i] = pred[order[i]];
    sorted_gt[i] = gt[order[i]];
  }

  // Full-set metrics use the sorted order too, so they equal the last growth
  // point bit for bit.
  RegressionEvalReport report;
  report.mse = Mse(sorted_pred, sorted_gt);
  report.spearman = SpearmanOrEmpty(sorted_pred, sorted_gt);
  for (std::size_t k = 2; k <= n; ++k) {
    const std::span<const double> p(sorted_pred.data(), k);
    const std::span<const double> g(sorted_gt.data(), k);
    report.growth.push_back(
        {static_cast<int>(k), Mse(p, g), SpearmanOrEmpty(p, g)});
  }
  return report;
}

}  // namespace charterlab::metrics
