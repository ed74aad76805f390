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

// JSON documents: scenario configs, population files, auction records and
// run metadata.

#ifndef SPECTRUM_CONFIG_IO_HPP_
#define SPECTRUM_CONFIG_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "spectrum/auction_core.hpp"
#include "spectrum/device_model.hpp"
#include "spectrum/experiment_harness.hpp"

namespace spectrum {

// Missing keys keep their defaults; unknown keys and malformed values throw
// Error(kConfig). The result is validated.
ScenarioConfig ScenarioConfigFromJson(const nlohmann::json& doc);
nlohmann::json ToJson(const ScenarioConfig& config);
ScenarioConfig LoadScenarioConfig(const std::string& path);

PopulationConfig PopulationConfigFromJson(const nlohmann::json& doc);
nlohmann::json ToJson(const PopulationConfig& config);

nlohmann::json ToJson(const Device& device);
Device DeviceFromJson(const nlohmann::json& doc);

nlohmann::json PopulationDocument(const std::vector<Device>& devices,
                                  std::uint64_t seed);
std::vector<Device> DevicesFromPopulationDocument(const nlohmann::json& doc);

// One auction per record: the instance, the allocation and the settlement.
nlohmann::json AuctionRecord(const AuctionInstance& instance,
                             const WdpResult& wdp,
                             const AuctionOutcome& outcome);
nlohmann::json ToJson(const AuctionInstance& instance);
AuctionInstance AuctionInstanceFromJson(const nlohmann::json& doc);

// Conventions that readers of a CSV need but that are not per-row values.
nlohmann::json RunMetadata(const ScenarioConfig& config,
                           std::string_view command);

// Throws Error(kIo).
void WriteJsonFile(const nlohmann::json& doc, const std::string& path);
nlohmann::json ReadJsonFile(const std::string& path);

}  // namespace spectrum

#endif  // SPECTRUM_CONFIG_IO_HPP_
