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

// Monte Carlo scenarios over seeded device populations: budget sweeps with
// and without compression, payment-rule comparisons, and CSV output.

#ifndef SPECTRUM_EXPERIMENT_HARNESS_HPP_
#define SPECTRUM_EXPERIMENT_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spectrum/auction_core.hpp"
#include "spectrum/device_model.hpp"
#include "spectrum/valuation.hpp"

namespace spectrum {

enum class CompressionSetting { kOff, kOn, kBoth };

std::string_view CompressionSettingName(CompressionSetting setting);
CompressionSetting ParseCompressionSetting(std::string_view name);

inline constexpr int kScenarioSchemaVersion = 1;

struct ScenarioConfig {
  int schema_version = kScenarioSchemaVersion;
  PopulationConfig population;
  std::vector<int> budgets{5, 10, 15, 20, 25, 30};
  CompressionSetting compression = CompressionSetting::kBoth;
  std::vector<PaymentRule> payment_rules{PaymentRule::kClarkePivot};
  // Variant used when a rule is given as plain "clearing".
  ClearingVariant clearing_variant = ClearingVariant::kLowestWinningBid;
  bool normalize_gain = false;
  double ssp_cost = 0.0;
  int replications = 100;
  // Replication r uses population seed base_seed + r.
  std::uint64_t base_seed = 1;
  std::string output_path = "results.csv";
  // Worker threads for replications; 0 picks the hardware concurrency.
  int threads = 0;

  // Throws Error(kConfig).
  void Validate() const;
};

struct MetricsRow {
  std::uint64_t seed = 0;
  int budget = 0;
  bool compression = false;
  PaymentRule payment_rule = PaymentRule::kClarkePivot;
  int winner_count = 0;
  double social_welfare = 0.0;
  double total_device_utility = 0.0;
  double ssp_utility = 0.0;
  // Zero when nobody wins.
  double mean_winner_latency_s = 0.0;

  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

// One auction: a population under one compression setting and one budget,
// settled under every configured payment rule.
struct InstanceRecord {
  std::uint64_t seed = 0;
  int budget = 0;
  bool compression = false;
  std::vector<Device> devices;
  std::vector<ValuationBreakdown> valuations;
  std::vector<double> latencies_s;  // achieved at the requested demand
  AuctionInstance instance;
  WdpResult wdp;
  std::vector<AuctionOutcome> outcomes;  // parallel to payment_rules
};

// All auctions for one replication seed, in (budget, compression) order.
std::vector<InstanceRecord> SimulateSeed(const ScenarioConfig& config,
                                         std::uint64_t seed);

// Rows sorted by (seed, budget, compression, payment rule); identical for
// any thread count.
std::vector<MetricsRow> RunScenario(const ScenarioConfig& config);

// RunScenario, requiring at least two payment rules.
std::vector<MetricsRow> ComparePaymentRules(const ScenarioConfig& config);

std::vector<MetricsRow> ToMetricsRows(const InstanceRecord& record);

// Means over seeds, grouped by (budget, compression, payment rule).
struct MetricsSummary {
  int budget = 0;
  bool compression = false;
  PaymentRule payment_rule = PaymentRule::kClarkePivot;
  int samples = 0;
  double mean_winner_count = 0.0;
  double mean_social_welfare = 0.0;
  double mean_device_utility = 0.0;
  double mean_ssp_utility = 0.0;
};

std::vector<MetricsSummary> Summarize(const std::vector<MetricsRow>& rows);

std::string CsvHeader();
void WriteCsv(const std::vector<MetricsRow>& rows, std::ostream& out);
// Throws Error(kInvalidParameter) for no rows, Error(kIo) if unwritable.
void EmitCsv(const std::vector<MetricsRow>& rows, const std::string& path);
// Inverse of WriteCsv. Throws Error(kIo) on malformed input.
std::vector<MetricsRow> ParseCsv(std::istream& in);

}  // namespace spectrum

#endif  // SPECTRUM_EXPERIMENT_HARNESS_HPP_
