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

#include "spectrum/device_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "spectrum/error.hpp"

namespace spectrum {
namespace {

constexpr double kWeightSumTolerance = 1e-9;

// Maps a 64-bit draw to [0, 1) using the top 53 bits. Unlike
// std::uniform_real_distribution this is identical across standard libraries.
double UnitDraw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double Sample(std::mt19937_64& rng, const Range& range) {
  const double u = UnitDraw(rng);
  if (range.min == range.max) return range.min;
  return range.min + u * (range.max - range.min);
}

std::int64_t SampleInteger(std::mt19937_64& rng, const Range& range) {
  const double lo = std::ceil(range.min);
  const double hi = std::floor(range.max);
  const double u = UnitDraw(rng);
  const double span = hi - lo + 1.0;
  return static_cast<std::int64_t>(lo + std::min(std::floor(u * span), span - 1.0));
}

void CheckRange(const Range& range, const char* name, double lower_bound,
                bool strict) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kConfig, std::string(name) + ": " + why);
  };
  if (!std::isfinite(range.min) || !std::isfinite(range.max)) {
    fail("bounds must be finite");
  }
  if (range.min > range.max) fail("min exceeds max");
  if (strict ? range.min <= lower_bound : range.min < lower_bound) {
    fail(std::string("min must be ") + (strict ? "> " : ">= ") +
         std::to_string(lower_bound));
  }
}

}  // namespace

void ValuationWeights::Validate() const {
  if (!std::isfinite(size) || !std::isfinite(latency) ||
      !std::isfinite(accuracy) || size < 0.0 || latency < 0.0 ||
      accuracy < 0.0) {
    throw Error(ErrorCode::kInvariantViolation,
                "valuation weights must be finite and non-negative");
  }
  if (std::abs(size + latency + accuracy - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorCode::kInvariantViolation,
                "valuation weights must sum to one");
  }
}

void Device::Validate() const {
  if (!std::isfinite(raw_size_bits) || raw_size_bits <= 0.0) {
    throw Error(ErrorCode::kInvalidParameter, "raw size must be positive");
  }
  queue.Validate();
  link.Validate();
  weights.Validate();
  if (queue_size < 0) {
    throw Error(ErrorCode::kInvalidParameter, "queue size must be >= 0");
  }
  if (!std::isfinite(energy_cost_per_unit) || energy_cost_per_unit < 0.0) {
    throw Error(ErrorCode::kInvalidParameter,
                "energy cost must be non-negative");
  }
  if (!std::isfinite(latency_requirement_s) || latency_requirement_s <= 0.0) {
    throw Error(ErrorCode::kInvalidParameter,
                "latency requirement must be positive");
  }
  if (compression) compression->Validate();
}

double TransmittedSizeBits(const Device& device) {
  return device.compression
             ? CompressedSizeBits(device.raw_size_bits, *device.compression)
             : device.raw_size_bits;
}

void PopulationConfig::Validate() const {
  if (device_count < 1) {
    throw Error(ErrorCode::kConfig, "device_count must be >= 1");
  }
  CheckRange(raw_size_bits, "raw_size_bits", 0.0, true);
  CheckRange(fill_rate_inverse_s, "fill_rate_inverse_s", 0.0, true);
  CheckRange(queue_size, "queue_size", 0.0, false);
  if (std::floor(queue_size.max) < std::ceil(queue_size.min)) {
    throw Error(ErrorCode::kConfig, "queue_size: no integer in range");
  }
  CheckRange(bandwidth_per_channel_hz, "bandwidth_per_channel_hz", 0.0, true);
  CheckRange(channel_gain, "channel_gain", 0.0, false);
  CheckRange(transmit_power_w, "transmit_power_w", 0.0, true);
  CheckRange(noise_psd, "noise_psd", 0.0, true);
  CheckRange(weight_size, "weight_size", 0.0, false);
  CheckRange(weight_latency, "weight_latency", 0.0, false);
  CheckRange(weight_accuracy, "weight_accuracy", 0.0, false);
  if (weight_size.min + weight_latency.min + weight_accuracy.min <= 0.0 &&
      weight_size.max + weight_latency.max + weight_accuracy.max <= 0.0) {
    throw Error(ErrorCode::kConfig, "weights cannot all be zero");
  }
  CheckRange(energy_cost_per_unit, "energy_cost_per_unit", 0.0, false);
  CheckRange(latency_requirement_s, "latency_requirement_s", 0.0, true);
  CheckRange(compression_ratio, "compression_ratio", 0.0, true);
  if (compression_ratio.max > 1.0) {
    throw Error(ErrorCode::kConfig, "compression_ratio: max exceeds 1");
  }
  if (compression_ratio.min < curve.min_ratio()) {
    throw Error(ErrorCode::kConfig,
                "compression_ratio: min is below the curve's first anchor");
  }
  if (!std::isfinite(compute_cost_coefficient) ||
      compute_cost_coefficient < 0.0) {
    throw Error(ErrorCode::kConfig,
                "compute_cost_coefficient must be non-negative");
  }
}

std::vector<Device> GeneratePopulation(const PopulationConfig& config) {
  config.Validate();
  std::mt19937_64 rng(config.seed);
  std::vector<Device> devices;
  devices.reserve(static_cast<std::size_t>(config.device_count));
  for (int i = 0; i < config.device_count; ++i) {
    Device d;
    d.id = i;
    d.raw_size_bits = Sample(rng, config.raw_size_bits);
    d.queue.fill_rate_inverse = Sample(rng, config.fill_rate_inverse_s);
    d.queue_size = SampleInteger(rng, config.queue_size);
    d.link.bandwidth_per_channel_hz =
        Sample(rng, config.bandwidth_per_channel_hz);
    d.link.channel_gain = Sample(rng, config.channel_gain);
    d.link.transmit_power_w = Sample(rng, config.transmit_power_w);
    d.link.noise_psd = Sample(rng, config.noise_psd);

    double w1 = Sample(rng, config.weight_size);
    double w2 = Sample(rng, config.weight_latency);
    double w3 = Sample(rng, config.weight_accuracy);
    double sum = w1 + w2 + w3;
    if (sum <= 0.0) {
      // All three draws hit zero; fall back to equal weights.
      w1 = w2 = w3 = 1.0;
      sum = 3.0;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      w1 /= sum;
      w2 /= sum;
      w3 /= sum;
    }
    d.weights = {w1, w2, w3};

    d.energy_cost_per_unit = Sample(rng, config.energy_cost_per_unit);
    d.latency_requirement_s = Sample(rng, config.latency_requirement_s);
    const double ratio = Sample(rng, config.compression_ratio);
    d.compression = Compress(d.raw_size_bits, config.curve, ratio,
                             config.compute_cost_coefficient);
    d.Validate();
    devices.push_back(std::move(d));
  }
  return devices;
}

std::vector<Device> WithoutCompression(std::vector<Device> devices) {
  for (auto& d : devices) d.compression.reset();
  return devices;
}

int SelectDemand(const Device& device, bool use_compression) {
  const double rate = ChannelCapacity(device.link);
  if (rate <= 0.0) {
    throw Error(ErrorCode::kNoFeasibleDemand,
                "device " + std::to_string(device.id) +
                    " has zero channel capacity");
  }
  if (!std::isfinite(device.latency_requirement_s) ||
      device.latency_requirement_s <= 0.0) {
    throw Error(ErrorCode::kInvalidParameter,
                "latency requirement must be positive");
  }
  const double size = use_compression ? TransmittedSizeBits(device)
                                      : device.raw_size_bits;
  const double target = device.latency_requirement_s;
  const double estimate = std::ceil(size / (rate * target));
  if (!(estimate < static_cast<double>(std::numeric_limits<int>::max()))) {
    throw Error(ErrorCode::kNoFeasibleDemand,
                "demand for device " + std::to_string(device.id) +
                    " overflows the channel count");
  }
  int channels = std::max(1, static_cast<int>(estimate));
  // Correct any off-by-one from rounding in the closed form.
  auto latency = [&](int c) {
    return TransmissionLatency(size, rate, c).seconds();
  };
  while (latency(channels) > target) ++channels;
  while (channels > 1 && latency(channels - 1) <= target) --channels;
  return channels;
}

}  // namespace spectrum
