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
#include <random>

#include "gtest/gtest.h"
#include "spectrum/error.hpp"

namespace spectrum {
namespace {

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected spectrum::Error";
  return ErrorCode::kIo;
}

TEST(Compress, RatioOneIsIdentity) {
  const auto profile = Compress(1000, RateAccuracyCurve::Default(), 1.0, 0.5);
  EXPECT_EQ(CompressedSizeBits(1000, profile), 1000.0);
  EXPECT_EQ(profile.accuracy, 1.0);
  EXPECT_EQ(profile.compute_cost, 0.0);
  EXPECT_EQ(profile, CompressionProfile::Identity());
}

TEST(Compress, AnchorLookupAndLinearInterpolation) {
  const RateAccuracyCurve curve({{0.1, 0.95}, {1.0, 1.0}});
  const auto profile = Compress(1000, curve, 0.1);
  EXPECT_DOUBLE_EQ(CompressedSizeBits(1000, profile), 100.0);
  EXPECT_EQ(profile.accuracy, 0.95);
  EXPECT_DOUBLE_EQ(curve.AccuracyAt(0.55), 0.975);
}

TEST(Compress, ComputeCostScalesWithRemovedBits) {
  const auto profile = Compress(2000, RateAccuracyCurve::Default(), 0.25, 0.01);
  EXPECT_DOUBLE_EQ(profile.compute_cost, 0.01 * 2000 * 0.75);
  EXPECT_EQ(CodeOf([] { CompressionComputeCost(1, 0.5, -1); }),
            ErrorCode::kInvalidParameter);
}

TEST(Compress, RejectsRatiosOutsideTheDomain) {
  const auto curve = RateAccuracyCurve::Default();
  for (double bad : {0.0, -0.1, 1.1, std::nan("")}) {
    EXPECT_EQ(CodeOf([&] { Compress(1000, curve, bad); }),
              ErrorCode::kInvalidParameter)
        << bad;
  }
  // Inside (0, 1] but left of the first anchor.
  EXPECT_EQ(CodeOf([&] { Compress(1000, curve, 0.01); }),
            ErrorCode::kInvalidParameter);
  EXPECT_EQ(CodeOf([&] { Compress(0, curve, 0.5); }),
            ErrorCode::kInvalidParameter);
}

TEST(RateAccuracyCurve, DefaultAnchors) {
  const auto curve = RateAccuracyCurve::Default();
  ASSERT_EQ(curve.anchors().size(), 4u);
  EXPECT_EQ(curve.anchors()[0], (RateAccuracyPoint{0.05, 0.90}));
  EXPECT_EQ(curve.anchors()[1], (RateAccuracyPoint{0.1, 0.95}));
  EXPECT_EQ(curve.anchors()[2], (RateAccuracyPoint{0.5, 0.99}));
  EXPECT_EQ(curve.anchors()[3], (RateAccuracyPoint{1.0, 1.0}));
}

TEST(RateAccuracyCurve, RejectsMalformedAnchors) {
  using Points = std::vector<RateAccuracyPoint>;
  const Points bad[] = {
      {},
      {{0.5, 0.9}},                            // no (1, 1) endpoint
      {{0.5, 0.9}, {0.5, 0.95}, {1.0, 1.0}},   // repeated ratio
      {{0.2, 0.9}, {0.1, 0.8}, {1.0, 1.0}},    // decreasing ratio
      {{0.1, 0.99}, {0.5, 0.9}, {1.0, 1.0}},   // accuracy decreases
      {{0.1, 1.2}, {1.0, 1.0}},                // accuracy above 1
      {{0.1, 0.9}, {1.0, 0.99}},               // endpoint accuracy not 1
  };
  for (const auto& points : bad) {
    EXPECT_EQ(CodeOf([&] { (void)RateAccuracyCurve{points}; }),
              ErrorCode::kInvalidParameter);
  }
}

TEST(CompressionProfile, UncompressedProfileMustBeLossless) {
  EXPECT_EQ(CodeOf([] { CompressionProfile{1.0, 0.9, 0.0}.Validate(); }),
            ErrorCode::kInvalidParameter);
  EXPECT_EQ(CodeOf([] { CompressionProfile{1.0, 1.0, 2.0}.Validate(); }),
            ErrorCode::kInvalidParameter);
}

RateAccuracyCurve RandomCurve(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = std::uniform_int_distribution<int>(0, 6)(rng);
  std::vector<double> ratios;
  for (int i = 0; i < n; ++i) ratios.push_back(0.01 + 0.98 * unit(rng));
  std::sort(ratios.begin(), ratios.end());
  ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());
  std::vector<double> accs;
  for (std::size_t i = 0; i < ratios.size(); ++i) accs.push_back(unit(rng));
  std::sort(accs.begin(), accs.end());
  std::vector<RateAccuracyPoint> anchors;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    anchors.push_back({ratios[i], accs[i]});
  }
  anchors.push_back({1.0, 1.0});
  return RateAccuracyCurve(std::move(anchors));
}

TEST(CompressionProperties, SizeNeverGrowsAndAccuracyIsMonotone) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const auto curve = t == 0 ? RateAccuracyCurve::Default() : RandomCurve(rng);
    const double raw = std::uniform_real_distribution<double>(1, 1e8)(rng);
    double previous_accuracy = -1.0;
    for (int k = 0; k <= 200; ++k) {
      const double ratio =
          curve.min_ratio() + (1.0 - curve.min_ratio()) * k / 200.0;
      const auto profile = Compress(raw, curve, std::min(ratio, 1.0), 1e-3);
      const double size = CompressedSizeBits(raw, profile);
      EXPECT_LE(size, raw);
      EXPECT_EQ(size == raw, profile.ratio == 1.0);
      EXPECT_GE(profile.accuracy, previous_accuracy);
      previous_accuracy = profile.accuracy;
    }
  }
}

}  // namespace
}  // namespace spectrum
