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

#include "spectrum/valuation.hpp"

#include <string>

#include "spectrum/error.hpp"

namespace spectrum {
namespace {

void RequireChannels(int channels) {
  if (channels < 1) {
    throw Error(ErrorCode::kInvalidParameter,
                "valuation needs at least one channel, got " +
                    std::to_string(channels));
  }
}

}  // namespace

ValuationBreakdown ValuationBreakdown::FromNetValue(double net_value) {
  ValuationBreakdown b;
  b.channel_value = net_value;
  b.total_value = net_value;
  b.net_value = net_value;
  return b;
}

double ChannelValuation(const Device& device, int channels) {
  RequireChannels(channels);
  const double rate = ChannelCapacity(device.link);
  const Latency latency =
      TransmissionLatency(TransmittedSizeBits(device), rate, channels);
  return channels * SuccessProbability(latency, device.queue);
}

double CompressionGain(const Device& device, int channels,
                       const ValuationOptions& options) {
  RequireChannels(channels);
  device.weights.Validate();
  if (!device.compression) return 0.0;

  const double rate = ChannelCapacity(device.link);
  const double raw = device.raw_size_bits;
  const double compressed = CompressedSizeBits(raw, *device.compression);
  const double t_raw = TransmissionLatency(raw, rate, channels).seconds();
  const double t = TransmissionLatency(compressed, rate, channels).seconds();

  double size_term = raw - compressed;
  double latency_term = t_raw - t;
  if (options.normalize_gain) {
    size_term /= raw;
    latency_term /= t_raw;
  }
  const auto& w = device.weights;
  return w.size * size_term + w.latency * latency_term +
         w.accuracy * device.compression->accuracy;
}

ValuationBreakdown TotalValuation(const Device& device, int channels,
                                  const ValuationOptions& options) {
  ValuationBreakdown b;
  b.channel_value = ChannelValuation(device, channels);
  b.compression_gain = CompressionGain(device, channels, options);
  b.total_value = b.channel_value + b.compression_gain;
  b.transmission_cost =
      ChannelCapacity(device.link) * channels * device.energy_cost_per_unit;
  b.compute_cost = device.compression ? device.compression->compute_cost : 0.0;
  b.total_cost = b.transmission_cost + b.compute_cost;
  b.net_value = b.total_value - b.total_cost;
  return b;
}

}  // namespace spectrum
