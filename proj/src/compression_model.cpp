/* Copyright 2026 The Spectrum Auction Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "spectrum/compression_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "spectrum/error.hpp"

namespace spectrum {
namespace {

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidParameter, message);
}

void RequireRatio(double ratio) {
  if (!std::isfinite(ratio) || ratio <= 0.0 || ratio > 1.0) {
    Invalid("compression ratio must lie in (0, 1], got " +
            std::to_string(ratio));
  }
}

}  // namespace

RateAccuracyCurve::RateAccuracyCurve(std::vector<RateAccuracyPoint> anchors,
                                     Interpolation interpolation)
    : anchors_(std::move(anchors)), interpolation_(interpolation) {
  if (anchors_.empty()) Invalid("rate/accuracy curve has no anchors");
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    const auto& p = anchors_[i];
    RequireRatio(p.ratio);
    if (!std::isfinite(p.accuracy) || p.accuracy < 0.0 || p.accuracy > 1.0) {
      Invalid("anchor accuracy must lie in [0, 1]");
    }
    if (i > 0) {
      if (p.ratio <= anchors_[i - 1].ratio) {
        Invalid("anchor ratios must be strictly increasing");
      }
      if (p.accuracy < anchors_[i - 1].accuracy) {
        Invalid("anchor accuracy must be non-decreasing in ratio");
      }
    }
  }
  if (anchors_.back().ratio != 1.0 || anchors_.back().accuracy != 1.0) {
    Invalid("rate/accuracy curve must end at (1, 1)");
  }
}

RateAccuracyCurve RateAccuracyCurve::Default() {
  return RateAccuracyCurve(
      {{0.05, 0.90}, {0.1, 0.95}, {0.5, 0.99}, {1.0, 1.0}});
}

double RateAccuracyCurve::AccuracyAt(double ratio) const {
  RequireRatio(ratio);
  if (ratio < min_ratio()) {
    Invalid("ratio " + std::to_string(ratio) +
            " is below the curve's smallest anchor");
  }
  auto upper = std::lower_bound(
      anchors_.begin(), anchors_.end(), ratio,
      [](const RateAccuracyPoint& p, double r) { return p.ratio < r; });
  if (upper->ratio == ratio) return upper->accuracy;
  auto lower = std::prev(upper);
  const double t = (ratio - lower->ratio) / (upper->ratio - lower->ratio);
  return lower->accuracy + t * (upper->accuracy - lower->accuracy);
}

void CompressionProfile::Validate() const {
  RequireRatio(ratio);
  if (!std::isfinite(accuracy) || accuracy < 0.0 || accuracy > 1.0) {
    Invalid("profile accuracy must lie in [0, 1]");
  }
  if (!std::isfinite(compute_cost) || compute_cost < 0.0) {
    Invalid("profile compute cost must be non-negative");
  }
  if (ratio == 1.0 && (accuracy != 1.0 || compute_cost != 0.0)) {
    Invalid("an uncompressed profile must have accuracy 1 and zero cost");
  }
}

double CompressionComputeCost(double raw_size_bits, double ratio,
                              double cost_coefficient) {
  if (!std::isfinite(cost_coefficient) || cost_coefficient < 0.0) {
    Invalid("compute cost coefficient must be non-negative");
  }
  return cost_coefficient * raw_size_bits * (1.0 - ratio);
}

CompressionProfile Compress(double raw_size_bits,
                            const RateAccuracyCurve& curve, double ratio,
                            double cost_coefficient) {
  if (!std::isfinite(raw_size_bits) || raw_size_bits <= 0.0) {
    Invalid("raw size must be finite and positive");
  }
  CompressionProfile profile;
  profile.ratio = ratio;
  profile.accuracy = curve.AccuracyAt(ratio);
  profile.compute_cost =
      CompressionComputeCost(raw_size_bits, ratio, cost_coefficient);
  profile.Validate();
  return profile;
}

}  // namespace spectrum
