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

#include <cmath>

#include "gtest/gtest.h"
#include "spectrum/error.hpp"
#include "test_devices.hpp"

namespace spectrum {
namespace {

using testing::MakeDevice;

TEST(ChannelValuation, NegligiblePayloadIsWorthOneChannel) {
  EXPECT_EQ(ChannelValuation(MakeDevice(1e-300, 10, 1), 1), 1.0);
}

TEST(ChannelValuation, LatencyEqualToLambda) {
  // 400 bits over 4 channels at 10 bit/s: T = 10 = lambda.
  EXPECT_DOUBLE_EQ(ChannelValuation(MakeDevice(400, 10, 10), 4),
                   1.47151776468576928638209508065);
}

TEST(ChannelValuation, UsesCompressedPayload) {
  Device d = MakeDevice(1000, 10, 10);
  d.compression = CompressionProfile{0.1, 0.95, 0.0};
  // T = 100 / (10 * 2) = 5.
  EXPECT_NEAR(ChannelValuation(d, 2), 1.21306131942526684720759906998, 1e-15);
}

TEST(ChannelValuation, RequiresAChannel) {
  EXPECT_THROW(ChannelValuation(MakeDevice(1, 10, 1), 0), Error);
}

TEST(ChannelValuation, StrictlyIncreasingInChannels) {
  PopulationConfig c;
  c.device_count = 100;
  for (const Device& d : GeneratePopulation(c)) {
    for (const Device& variant : {d, WithoutCompression({d}).front()}) {
      double previous = 0.0;
      for (int channels = 1; channels <= 60; ++channels) {
        const double v = ChannelValuation(variant, channels);
        EXPECT_GT(v, previous);
        EXPECT_LE(v, channels);
        previous = v;
      }
    }
  }
}

TEST(CompressionGain, ZeroWithoutCompression) {
  EXPECT_EQ(CompressionGain(MakeDevice(1000, 10, 1), 3), 0.0);
}

TEST(CompressionGain, WorkedArithmetic) {
  // d = 1000, d_hat = 100, r * C = 100: T_raw = 10, T = 1.
  Device d = MakeDevice(1000, 10, 1);
  d.compression = CompressionProfile{0.1, 0.95, 0.0};
  EXPECT_NEAR(CompressionGain(d, 10), 0.5 * 900 + 0.3 * 9 + 0.2 * 0.95,
              1e-12);
  EXPECT_NEAR(CompressionGain(d, 10), 452.89, 1e-12);
}

TEST(CompressionGain, IdentityProfileVersusNoProfile) {
  Device d = MakeDevice(1000, 10, 1);
  // No profile: the raw-transmission convention, no gain at all.
  EXPECT_EQ(CompressionGain(d, 2), 0.0);
  // Identity profile: size and latency terms vanish, leaving w3 * 1.
  d.compression = CompressionProfile::Identity();
  EXPECT_DOUBLE_EQ(CompressionGain(d, 2), d.weights.accuracy);
}

TEST(CompressionGain, NormalizedTermsAreUnitless) {
  Device d = MakeDevice(1000, 10, 1);
  d.compression = CompressionProfile{0.1, 0.95, 0.0};
  const double gain = CompressionGain(d, 10, ValuationOptions{true});
  EXPECT_NEAR(gain, 0.5 * 0.9 + 0.3 * 0.9 + 0.2 * 0.95, 1e-12);
}

TEST(CompressionGain, WeightsMustSumToOne) {
  Device d = MakeDevice(1000, 10, 1);
  d.weights = {0.6, 0.6, 0.2};
  try {
    CompressionGain(d, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvariantViolation);
  }
}

TEST(TotalValuation, TransmissionCostArithmetic) {
  Device d = MakeDevice(100, 10, 1);
  d.energy_cost_per_unit = 0.1;
  const auto b = TotalValuation(d, 2);
  EXPECT_DOUBLE_EQ(b.transmission_cost, 2.0);
  EXPECT_EQ(b.compute_cost, 0.0);
  EXPECT_DOUBLE_EQ(b.total_cost, 2.0);
  EXPECT_EQ(b.compression_gain, 0.0);
}

TEST(TotalValuation, ComposesAdditively) {
  Device d = MakeDevice(1000, 10, 10);
  d.compression = CompressionProfile{0.1, 0.95, 1.5};
  d.energy_cost_per_unit = 0.01;
  const auto b = TotalValuation(d, 10);
  EXPECT_EQ(b.total_value, b.channel_value + b.compression_gain);
  EXPECT_EQ(b.compute_cost, 1.5);
  EXPECT_DOUBLE_EQ(b.transmission_cost, 1.0);
  EXPECT_EQ(b.net_value, b.total_value - b.total_cost);
}

// Independent evaluation of the valuation formulas, natural-log based.
struct Reference {
  double channel_value, gain, transmission_cost, compute_cost;
};

Reference Recompute(const Device& d, int c) {
  const double snr = d.link.channel_gain * d.link.transmit_power_w /
                     d.link.noise_psd;
  const double r = d.link.bandwidth_per_channel_hz * std::log1p(snr) /
                   std::log(2.0);
  const double raw = d.raw_size_bits;
  const double sent = d.compression ? raw * d.compression->ratio : raw;
  const double t = sent / (r * c);
  const double t_raw = raw / (r * c);
  Reference ref{};
  ref.channel_value = c * std::exp(-t / d.queue.fill_rate_inverse);
  ref.gain = d.compression ? d.weights.size * (raw - sent) +
                                 d.weights.latency * (t_raw - t) +
                                 d.weights.accuracy * d.compression->accuracy
                           : 0.0;
  ref.transmission_cost = r * c * d.energy_cost_per_unit;
  ref.compute_cost = d.compression ? d.compression->compute_cost : 0.0;
  return ref;
}

TEST(TotalValuation, MatchesIndependentRecomputation) {
  PopulationConfig c;
  c.device_count = 300;
  c.seed = 99;
  auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(b));
  };
  for (const Device& generated : GeneratePopulation(c)) {
    for (const Device& d : {generated, WithoutCompression({generated})[0]}) {
      for (int channels : {1, 3, SelectDemand(d, true)}) {
        const auto b = TotalValuation(d, channels);
        const auto ref = Recompute(d, channels);
        EXPECT_TRUE(close(b.channel_value, ref.channel_value));
        EXPECT_TRUE(close(b.compression_gain, ref.gain));
        EXPECT_TRUE(close(b.transmission_cost, ref.transmission_cost));
        EXPECT_EQ(b.compute_cost, ref.compute_cost);
        EXPECT_NEAR(b.total_value, b.channel_value + b.compression_gain,
                    1e-9 * std::max(1.0, std::abs(b.total_value)));
        EXPECT_EQ(b.total_cost, b.transmission_cost + b.compute_cost);
        EXPECT_EQ(b.net_value, b.total_value - b.total_cost);
      }
    }
  }
}

}  // namespace
}  // namespace spectrum
