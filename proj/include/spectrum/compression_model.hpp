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

// Parametric stand-in for an autoencoder compressor: a rate/accuracy curve
// maps a compression ratio to the accuracy retained by the decoder.

#ifndef SPECTRUM_COMPRESSION_MODEL_HPP_
#define SPECTRUM_COMPRESSION_MODEL_HPP_

#include <span>
#include <vector>

namespace spectrum {

struct RateAccuracyPoint {
  double ratio = 1.0;
  double accuracy = 1.0;

  friend bool operator==(const RateAccuracyPoint&,
                         const RateAccuracyPoint&) = default;
};

enum class Interpolation { kPiecewiseLinear };

class RateAccuracyCurve {
 public:
  // Anchors must have strictly increasing ratios in (0, 1], accuracies in
  // [0, 1] non-decreasing in ratio, and end at (1, 1).
  explicit RateAccuracyCurve(
      std::vector<RateAccuracyPoint> anchors,
      Interpolation interpolation = Interpolation::kPiecewiseLinear);

  // {(0.05, 0.90), (0.1, 0.95), (0.5, 0.99), (1.0, 1.0)}.
  static RateAccuracyCurve Default();

  // Throws Error(kInvalidParameter) outside [anchors().front().ratio, 1].
  double AccuracyAt(double ratio) const;

  double min_ratio() const { return anchors_.front().ratio; }
  std::span<const RateAccuracyPoint> anchors() const { return anchors_; }
  Interpolation interpolation() const { return interpolation_; }

  friend bool operator==(const RateAccuracyCurve&,
                         const RateAccuracyCurve&) = default;

 private:
  std::vector<RateAccuracyPoint> anchors_;
  Interpolation interpolation_;
};

struct CompressionProfile {
  double ratio = 1.0;         // compressed size / raw size, in (0, 1]
  double accuracy = 1.0;      // in [0, 1]
  double compute_cost = 0.0;  // same currency as payments

  static CompressionProfile Identity() { return {}; }

  void Validate() const;

  friend bool operator==(const CompressionProfile&,
                         const CompressionProfile&) = default;
};

// Cost of running the encoder: coefficient * raw_size * (1 - ratio).
double CompressionComputeCost(double raw_size_bits, double ratio,
                              double cost_coefficient);

CompressionProfile Compress(double raw_size_bits,
                            const RateAccuracyCurve& curve, double ratio,
                            double cost_coefficient = 0.0);

inline double CompressedSizeBits(double raw_size_bits,
                                 const CompressionProfile& profile) {
  return profile.ratio * raw_size_bits;
}

}  // namespace spectrum

#endif  // SPECTRUM_COMPRESSION_MODEL_HPP_
