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

// Radio link model: Shannon capacity per channel, uplink transmission latency
// and the exponential success probability of a queued transmission.

#ifndef SPECTRUM_CHANNEL_MODEL_HPP_
#define SPECTRUM_CHANNEL_MODEL_HPP_

namespace spectrum {

// Capacities are reported in bits/s, i.e. the logarithm is base 2.
inline constexpr int kCapacityLogBase = 2;

struct LinkParams {
  double bandwidth_per_channel_hz = 1.0;
  double channel_gain = 0.0;
  double transmit_power_w = 1.0;
  double noise_psd = 1.0;

  // Throws Error(kInvalidParameter) on non-finite or out-of-range fields.
  void Validate() const;

  friend bool operator==(const LinkParams&, const LinkParams&) = default;
};

struct QueueParams {
  // Inverse of the queue fill rate, in seconds.
  double fill_rate_inverse = 1.0;

  void Validate() const;

  friend bool operator==(const QueueParams&, const QueueParams&) = default;
};

// Uplink latency of a payload. A zero-channel grant never transmits; that
// case is a distinct state rather than +inf.
class Latency {
 public:
  static Latency Seconds(double seconds);
  static Latency NoTransmission() { return Latency(); }

  bool transmitted() const { return transmitted_; }
  // Throws Error(kDivisionDegenerate) for the no-transmission state.
  double seconds() const;

  friend bool operator==(const Latency&, const Latency&) = default;

 private:
  Latency() = default;
  bool transmitted_ = false;
  double seconds_ = 0.0;
};

// M * log2(1 + g * P / N0^2), bits/s per channel.
double ChannelCapacity(const LinkParams& link);

// size / (rate * channels). channels == 0 gives Latency::NoTransmission();
// a non-positive rate throws Error(kDivisionDegenerate).
Latency TransmissionLatency(double size_bits, double rate_bps, int channels);

// exp(-T / lambda). Throws Error(kInvalidParameter) for negative latency.
double SuccessProbability(double latency_s, const QueueParams& queue);
// Zero for the no-transmission state.
double SuccessProbability(const Latency& latency, const QueueParams& queue);

}  // namespace spectrum

#endif  // SPECTRUM_CHANNEL_MODEL_HPP_
