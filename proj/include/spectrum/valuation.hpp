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

// Device-side valuation of a channel bundle: the success-discounted channel
// value, the gain from compressing, and transmission/compute costs.

#ifndef SPECTRUM_VALUATION_HPP_
#define SPECTRUM_VALUATION_HPP_

#include "spectrum/device_model.hpp"

namespace spectrum {

struct ValuationOptions {
  // Divide the size and latency terms of the compression gain by the raw
  // size and the raw latency so that all three terms are unitless.
  bool normalize_gain = false;
};

struct ValuationBreakdown {
  double channel_value = 0.0;
  double compression_gain = 0.0;
  double total_value = 0.0;
  double transmission_cost = 0.0;
  double compute_cost = 0.0;
  double total_cost = 0.0;
  double net_value = 0.0;

  // Breakdown for an abstract bidder whose whole value is `net_value` and
  // whose costs are zero.
  static ValuationBreakdown FromNetValue(double net_value);

  friend bool operator==(const ValuationBreakdown&,
                         const ValuationBreakdown&) = default;
};

// C * exp(-T / lambda), T the latency of the transmitted payload over C
// channels.
double ChannelValuation(const Device& device, int channels);

// w1 (d - d_hat) + w2 (T_raw - T) + w3 Acc, with both latencies taken at the
// same channel count. Zero for a device that transmits raw data.
double CompressionGain(const Device& device, int channels,
                       const ValuationOptions& options = {});

ValuationBreakdown TotalValuation(const Device& device, int channels,
                                  const ValuationOptions& options = {});

}  // namespace spectrum

#endif  // SPECTRUM_VALUATION_HPP_
