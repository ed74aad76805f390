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

#include "spectrum/channel_model.hpp"

#include <cmath>
#include <string>

#include "spectrum/error.hpp"

namespace spectrum {
namespace {

void RequirePositive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw Error(ErrorCode::kInvalidParameter,
                std::string(name) + " must be finite and positive, got " +
                    std::to_string(value));
  }
}

}  // namespace

void LinkParams::Validate() const {
  RequirePositive(bandwidth_per_channel_hz, "bandwidth_per_channel_hz");
  RequirePositive(transmit_power_w, "transmit_power_w");
  RequirePositive(noise_psd, "noise_psd");
  if (!std::isfinite(channel_gain) || channel_gain < 0.0) {
    throw Error(ErrorCode::kInvalidParameter,
                "channel_gain must be finite and non-negative");
  }
}

void QueueParams::Validate() const {
  RequirePositive(fill_rate_inverse, "fill_rate_inverse");
}

Latency Latency::Seconds(double seconds) {
  if (!std::isfinite(seconds) || seconds < 0.0) {
    throw Error(ErrorCode::kInvalidParameter,
                "latency must be finite and non-negative");
  }
  Latency latency;
  latency.transmitted_ = true;
  latency.seconds_ = seconds;
  return latency;
}

double Latency::seconds() const {
  if (!transmitted_) {
    throw Error(ErrorCode::kDivisionDegenerate,
                "no channels granted: latency is unbounded");
  }
  return seconds_;
}

double ChannelCapacity(const LinkParams& link) {
  link.Validate();
  const double snr = link.channel_gain * link.transmit_power_w / link.noise_psd;
  return link.bandwidth_per_channel_hz * std::log2(1.0 + snr);
}

Latency TransmissionLatency(double size_bits, double rate_bps, int channels) {
  if (!std::isfinite(size_bits) || size_bits < 0.0) {
    throw Error(ErrorCode::kInvalidParameter,
                "payload size must be finite and non-negative");
  }
  if (channels < 0) {
    throw Error(ErrorCode::kInvalidParameter, "negative channel count");
  }
  if (!std::isfinite(rate_bps) || rate_bps <= 0.0) {
    throw Error(ErrorCode::kDivisionDegenerate,
                "channel rate must be positive to transmit");
  }
  if (channels == 0) return Latency::NoTransmission();
  return Latency::Seconds(size_bits / (rate_bps * channels));
}

double SuccessProbability(double latency_s, const QueueParams& queue) {
  queue.Validate();
  if (std::isnan(latency_s) || latency_s < 0.0) {
    throw Error(ErrorCode::kInvalidParameter, "latency must be non-negative");
  }
  return std::exp(-latency_s / queue.fill_rate_inverse);
}

double SuccessProbability(const Latency& latency, const QueueParams& queue) {
  if (!latency.transmitted()) {
    queue.Validate();
    return 0.0;
  }
  return SuccessProbability(latency.seconds(), queue);
}

}  // namespace spectrum
