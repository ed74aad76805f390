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

#include <cmath>

#include "gtest/gtest.h"
#include "spectrum/error.hpp"
#include "test_devices.hpp"

namespace spectrum {
namespace {

using testing::MakeDevice;

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

PopulationConfig ConstantConfig() {
  PopulationConfig c;
  c.device_count = 1;
  c.seed = 3;
  c.raw_size_bits = Range::Constant(1e6);
  c.fill_rate_inverse_s = Range::Constant(2.0);
  c.queue_size = Range::Constant(17);
  c.bandwidth_per_channel_hz = Range::Constant(1e5);
  c.channel_gain = Range::Constant(1e-6);
  c.transmit_power_w = Range::Constant(0.1);
  c.noise_psd = Range::Constant(1e-9);
  c.weight_size = Range::Constant(0.5);
  c.weight_latency = Range::Constant(0.3);
  c.weight_accuracy = Range::Constant(0.2);
  c.energy_cost_per_unit = Range::Constant(1e-7);
  c.latency_requirement_s = Range::Constant(1.5);
  c.compression_ratio = Range::Constant(0.1);
  c.compute_cost_coefficient = 1e-3;
  return c;
}

TEST(GeneratePopulation, ConstantFieldsAreCopiedVerbatim) {
  const auto devices = GeneratePopulation(ConstantConfig());
  ASSERT_EQ(devices.size(), 1u);
  const Device& d = devices[0];
  EXPECT_EQ(d.id, 0);
  EXPECT_EQ(d.raw_size_bits, 1e6);
  EXPECT_EQ(d.queue.fill_rate_inverse, 2.0);
  EXPECT_EQ(d.queue_size, 17);
  EXPECT_EQ(d.link.bandwidth_per_channel_hz, 1e5);
  EXPECT_EQ(d.link.channel_gain, 1e-6);
  EXPECT_EQ(d.link.transmit_power_w, 0.1);
  EXPECT_EQ(d.link.noise_psd, 1e-9);
  EXPECT_EQ(d.weights, (ValuationWeights{0.5, 0.3, 0.2}));
  EXPECT_EQ(d.energy_cost_per_unit, 1e-7);
  EXPECT_EQ(d.latency_requirement_s, 1.5);
  ASSERT_TRUE(d.compression.has_value());
  EXPECT_EQ(d.compression->ratio, 0.1);
  EXPECT_EQ(d.compression->accuracy, 0.95);
  EXPECT_DOUBLE_EQ(d.compression->compute_cost, 1e-3 * 1e6 * 0.9);
}

TEST(GeneratePopulation, DeterministicPerSeed) {
  PopulationConfig c;
  c.device_count = 10;
  c.seed = 7;
  const auto a = GeneratePopulation(c);
  const auto b = GeneratePopulation(c);
  EXPECT_EQ(a, b);
  c.seed = 8;
  EXPECT_NE(a, GeneratePopulation(c));
}

TEST(GeneratePopulation, DevicesSatisfyInvariants) {
  PopulationConfig c;
  c.device_count = 200;
  for (const Device& d : GeneratePopulation(c)) {
    EXPECT_NO_THROW(d.Validate());
    EXPECT_NEAR(d.weights.size + d.weights.latency + d.weights.accuracy, 1.0,
                1e-9);
    EXPECT_GE(d.raw_size_bits, c.raw_size_bits.min);
    EXPECT_LE(d.raw_size_bits, c.raw_size_bits.max);
    EXPECT_GE(d.queue_size, 0);
    EXPECT_LE(d.queue_size, 100);
  }
}

TEST(GeneratePopulation, RejectsInvalidConfigs) {
  auto expect_config_error = [](PopulationConfig c) {
    EXPECT_EQ(CodeOf([&] { GeneratePopulation(c); }), ErrorCode::kConfig);
  };
  PopulationConfig c;
  c.device_count = 0;
  expect_config_error(c);
  c = {};
  c.raw_size_bits = {10.0, 5.0};
  expect_config_error(c);
  c = {};
  c.noise_psd = Range::Constant(0.0);
  expect_config_error(c);
  c = {};
  c.compression_ratio = {0.01, 0.5};  // below the first curve anchor
  expect_config_error(c);
  c = {};
  c.compression_ratio = {0.5, 1.5};
  expect_config_error(c);
  c = {};
  c.weight_size = c.weight_latency = c.weight_accuracy = Range::Constant(0.0);
  expect_config_error(c);
  c = {};
  c.latency_requirement_s = {NAN, 1.0};
  expect_config_error(c);
}

TEST(WithoutCompression, StripsProfiles) {
  PopulationConfig c;
  c.device_count = 5;
  for (const Device& d : WithoutCompression(GeneratePopulation(c))) {
    EXPECT_FALSE(d.compression.has_value());
    EXPECT_EQ(TransmittedSizeBits(d), d.raw_size_bits);
  }
}

TEST(SelectDemand, Examples) {
  EXPECT_EQ(SelectDemand(MakeDevice(100, 10, 1, 100), false), 1);
  EXPECT_EQ(SelectDemand(MakeDevice(100, 10, 1, 2.5), false), 4);

  Device d = MakeDevice(1e5, 1e3, 1, 5);
  d.compression = CompressionProfile{0.1, 0.95, 0.0};
  EXPECT_EQ(SelectDemand(d, true), 2);
  EXPECT_EQ(SelectDemand(d, false), 20);
}

TEST(SelectDemand, ZeroCapacityHasNoFeasibleDemand) {
  Device d = MakeDevice(100, 10, 1);
  d.link.channel_gain = 0.0;
  EXPECT_EQ(CodeOf([&] { SelectDemand(d, false); }),
            ErrorCode::kNoFeasibleDemand);
}

TEST(SelectDemand, CompressedNeverExceedsRawAndIsMinimal) {
  PopulationConfig c;
  c.device_count = 500;
  c.latency_requirement_s = {0.01, 3.0};
  for (const Device& d : GeneratePopulation(c)) {
    const double rate = ChannelCapacity(d.link);
    const int compressed = SelectDemand(d, true);
    const int raw = SelectDemand(d, false);
    EXPECT_LE(compressed, raw);
    for (bool use : {true, false}) {
      const int demand = use ? compressed : raw;
      const double size = use ? TransmittedSizeBits(d) : d.raw_size_bits;
      EXPECT_LE(TransmissionLatency(size, rate, demand).seconds(),
                d.latency_requirement_s);
      if (demand > 1) {
        EXPECT_GT(TransmissionLatency(size, rate, demand - 1).seconds(),
                  d.latency_requirement_s);
      }
    }
  }
}

TEST(ValuationWeights, MustSumToOne) {
  EXPECT_NO_THROW((ValuationWeights{0.5, 0.3, 0.2}.Validate()));
  EXPECT_EQ(CodeOf([] { ValuationWeights{0.5, 0.5, 0.5}.Validate(); }),
            ErrorCode::kInvariantViolation);
  EXPECT_EQ(CodeOf([] { ValuationWeights{1.5, -0.5, 0.0}.Validate(); }),
            ErrorCode::kInvariantViolation);
}

}  // namespace
}  // namespace spectrum
