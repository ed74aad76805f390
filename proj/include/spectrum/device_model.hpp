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

#ifndef SPECTRUM_DEVICE_MODEL_HPP_
#define SPECTRUM_DEVICE_MODEL_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "spectrum/channel_model.hpp"
#include "spectrum/compression_model.hpp"

namespace spectrum {

// Relative importance of saved bits, saved latency and retained accuracy.
// Must sum to one.
struct ValuationWeights {
  double size = 1.0 / 3.0;
  double latency = 1.0 / 3.0;
  double accuracy = 1.0 / 3.0;

  void Validate() const;

  friend bool operator==(const ValuationWeights&,
                         const ValuationWeights&) = default;
};

struct Device {
  int id = 0;
  double raw_size_bits = 1.0;
  QueueParams queue;
  // Carried for completeness; no formula consumes it.
  std::int64_t queue_size = 0;
  LinkParams link;
  ValuationWeights weights;
  double energy_cost_per_unit = 0.0;
  double latency_requirement_s = 1.0;
  // Absent when the device transmits raw data.
  std::optional<CompressionProfile> compression;

  void Validate() const;

  friend bool operator==(const Device&, const Device&) = default;
};

// Bits actually put on the air: compressed size when a profile is attached.
double TransmittedSizeBits(const Device& device);

// Closed interval sampled uniformly; min == max is a constant.
struct Range {
  double min = 0.0;
  double max = 0.0;

  static Range Constant(double value) { return {value, value}; }

  friend bool operator==(const Range&, const Range&) = default;
};

struct PopulationConfig {
  int device_count = 30;
  std::uint64_t seed = 1;

  Range raw_size_bits{5.0e6, 3.0e7};
  Range fill_rate_inverse_s{1.0, 5.0};
  Range queue_size{0.0, 100.0};
  Range bandwidth_per_channel_hz = Range::Constant(2.0e5);
  Range channel_gain{1.0e-7, 1.0e-6};
  Range transmit_power_w{0.1, 0.2};
  Range noise_psd = Range::Constant(1.0e-9);
  // Raw draws, normalized per device to sum to one.
  Range weight_size{0.0, 1.0};
  Range weight_latency{0.0, 1.0};
  Range weight_accuracy{0.0, 1.0};
  Range energy_cost_per_unit{5.0e-8, 2.0e-7};
  Range latency_requirement_s{0.5, 2.0};

  Range compression_ratio{0.05, 0.3};
  RateAccuracyCurve curve = RateAccuracyCurve::Default();
  double compute_cost_coefficient = 1.0e-3;

  // Throws Error(kConfig).
  void Validate() const;

  friend bool operator==(const PopulationConfig&,
                         const PopulationConfig&) = default;
};

// Deterministic in config.seed. Every device carries a compression profile;
// use WithoutCompression() for the raw-transmission baseline.
std::vector<Device> GeneratePopulation(const PopulationConfig& config);

std::vector<Device> WithoutCompression(std::vector<Device> devices);

// Smallest C >= 1 with size / (r * C) <= latency requirement, where size is
// the compressed size if use_compression and a profile is attached.
// Throws Error(kNoFeasibleDemand) when the link capacity is zero.
int SelectDemand(const Device& device, bool use_compression);

}  // namespace spectrum

#endif  // SPECTRUM_DEVICE_MODEL_HPP_
