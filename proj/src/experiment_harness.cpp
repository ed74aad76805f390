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

#include "spectrum/experiment_harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "spectrum/error.hpp"

namespace spectrum {
namespace {

constexpr std::string_view kCsvColumns[] = {
    "seed",           "budget",
    "compression",    "payment_rule",
    "winner_count",   "social_welfare",
    "total_device_utility", "ssp_utility",
    "mean_winner_latency_s"};

std::vector<bool> CompressionFlags(CompressionSetting setting) {
  switch (setting) {
    case CompressionSetting::kOff: return {false};
    case CompressionSetting::kOn: return {true};
    case CompressionSetting::kBoth: return {false, true};
  }
  return {};
}

auto RowKey(const MetricsRow& r) {
  return std::make_tuple(r.seed, r.budget, r.compression,
                         static_cast<int>(r.payment_rule));
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw Error(ErrorCode::kIo, "cannot format value");
  return std::string(buffer, end);
}

template <typename T>
T ParseNumber(std::string_view field, std::size_t line) {
  T value{};
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                   value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    throw Error(ErrorCode::kIo, "line " + std::to_string(line) +
                                    ": bad numeric field '" +
                                    std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

std::string_view CompressionSettingName(CompressionSetting setting) {
  switch (setting) {
    case CompressionSetting::kOff: return "off";
    case CompressionSetting::kOn: return "on";
    case CompressionSetting::kBoth: return "both";
  }
  return "unknown";
}

CompressionSetting ParseCompressionSetting(std::string_view name) {
  if (name == "off") return CompressionSetting::kOff;
  if (name == "on") return CompressionSetting::kOn;
  if (name == "both") return CompressionSetting::kBoth;
  throw Error(ErrorCode::kConfig,
              "compression must be on, off or both, got '" +
                  std::string(name) + "'");
}

void ScenarioConfig::Validate() const {
  if (schema_version != kScenarioSchemaVersion) {
    throw Error(ErrorCode::kConfig,
                "unsupported schema_version " + std::to_string(schema_version));
  }
  population.Validate();
  if (budgets.empty()) throw Error(ErrorCode::kConfig, "budgets is empty");
  for (int b : budgets) {
    if (b < 0) throw Error(ErrorCode::kConfig, "budgets must be >= 0");
  }
  if (payment_rules.empty()) {
    throw Error(ErrorCode::kConfig, "payment_rules is empty");
  }
  if (replications < 1) {
    throw Error(ErrorCode::kConfig, "replications must be >= 1");
  }
  if (!std::isfinite(ssp_cost) || ssp_cost < 0.0) {
    throw Error(ErrorCode::kConfig, "ssp_cost must be non-negative");
  }
  if (threads < 0) throw Error(ErrorCode::kConfig, "threads must be >= 0");
}

std::vector<InstanceRecord> SimulateSeed(const ScenarioConfig& config,
                                         std::uint64_t seed) {
  PopulationConfig population = config.population;
  population.seed = seed;
  const std::vector<Device> generated = GeneratePopulation(population);
  const ValuationOptions options{config.normalize_gain};

  std::vector<InstanceRecord> records;
  for (bool compressed : CompressionFlags(config.compression)) {
    const std::vector<Device> devices =
        compressed ? generated : WithoutCompression(generated);

    AuctionInstance base;
    base.ssp_cost = config.ssp_cost;
    std::vector<ValuationBreakdown> valuations;
    std::vector<double> latencies;
    for (const Device& d : devices) {
      const int demand = SelectDemand(d, compressed);
      const ValuationBreakdown v = TotalValuation(d, demand, options);
      base.demands.push_back(demand);
      // Truthful bidders report their net value.
      base.bids.push_back(v.net_value);
      valuations.push_back(v);
      latencies.push_back(TransmissionLatency(TransmittedSizeBits(d),
                                              ChannelCapacity(d.link), demand)
                              .seconds());
    }

    for (int budget : config.budgets) {
      InstanceRecord record;
      record.seed = seed;
      record.budget = budget;
      record.compression = compressed;
      record.devices = devices;
      record.valuations = valuations;
      record.latencies_s = latencies;
      record.instance = base;
      record.instance.budget = budget;
      // Allocation does not depend on the payment rule: solve once.
      record.wdp = SolveWdp(record.instance);
      for (PaymentRule rule : config.payment_rules) {
        const std::vector<double> payments =
            Payments(record.instance, record.wdp, rule);
        record.outcomes.push_back(Settle(record.instance, record.wdp,
                                         record.valuations, payments, rule));
      }
      records.push_back(std::move(record));
    }
  }
  return records;
}

std::vector<MetricsRow> ToMetricsRows(const InstanceRecord& record) {
  double latency_sum = 0.0;
  for (int k : record.wdp.winners) {
    latency_sum += record.latencies_s[static_cast<std::size_t>(k)];
  }
  const double mean_latency =
      record.wdp.winners.empty()
          ? 0.0
          : latency_sum / static_cast<double>(record.wdp.winners.size());

  std::vector<MetricsRow> rows;
  for (const AuctionOutcome& outcome : record.outcomes) {
    MetricsRow row;
    row.seed = record.seed;
    row.budget = record.budget;
    row.compression = record.compression;
    row.payment_rule = outcome.payment_rule;
    row.winner_count = outcome.winner_count();
    row.social_welfare = outcome.social_welfare;
    row.total_device_utility = outcome.total_device_utility();
    row.ssp_utility = outcome.ssp_utility;
    row.mean_winner_latency_s = mean_latency;
    rows.push_back(row);
  }
  return rows;
}

std::vector<MetricsRow> RunScenario(const ScenarioConfig& config) {
  config.Validate();
  const auto replications = static_cast<std::size_t>(config.replications);
  std::vector<std::vector<MetricsRow>> per_seed(replications);

  unsigned workers = config.threads > 0
                         ? static_cast<unsigned>(config.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(replications));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t r = next++; r < replications; r = next++) {
      try {
        const std::uint64_t seed = config.base_seed + r;
        for (const auto& record : SimulateSeed(config, seed)) {
          auto rows = ToMetricsRows(record);
          per_seed[r].insert(per_seed[r].end(), rows.begin(), rows.end());
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<MetricsRow> rows;
  for (auto& chunk : per_seed) rows.insert(rows.end(), chunk.begin(), chunk.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const MetricsRow& a, const MetricsRow& b) {
                     return RowKey(a) < RowKey(b);
                   });
  return rows;
}

std::vector<MetricsRow> ComparePaymentRules(const ScenarioConfig& config) {
  if (config.payment_rules.size() < 2) {
    throw Error(ErrorCode::kConfig,
                "comparing payment rules needs at least two rules");
  }
  return RunScenario(config);
}

std::vector<MetricsSummary> Summarize(const std::vector<MetricsRow>& rows) {
  std::map<std::tuple<int, bool, int>, MetricsSummary> groups;
  for (const auto& row : rows) {
    auto& s = groups[{row.budget, row.compression,
                      static_cast<int>(row.payment_rule)}];
    s.budget = row.budget;
    s.compression = row.compression;
    s.payment_rule = row.payment_rule;
    ++s.samples;
    s.mean_winner_count += row.winner_count;
    s.mean_social_welfare += row.social_welfare;
    s.mean_device_utility += row.total_device_utility;
    s.mean_ssp_utility += row.ssp_utility;
  }
  std::vector<MetricsSummary> out;
  for (auto& [key, s] : groups) {
    const double n = s.samples;
    s.mean_winner_count /= n;
    s.mean_social_welfare /= n;
    s.mean_device_utility /= n;
    s.mean_ssp_utility /= n;
    out.push_back(s);
  }
  return out;
}

std::string CsvHeader() {
  std::string header;
  for (std::string_view column : kCsvColumns) {
    if (!header.empty()) header += ',';
    header += column;
  }
  return header;
}

void WriteCsv(const std::vector<MetricsRow>& rows, std::ostream& out) {
  out << CsvHeader() << '\n';
  for (const auto& r : rows) {
    out << r.seed << ',' << r.budget << ',' << (r.compression ? "on" : "off")
        << ',' << PaymentRuleName(r.payment_rule) << ',' << r.winner_count
        << ',' << FormatDouble(r.social_welfare) << ','
        << FormatDouble(r.total_device_utility) << ','
        << FormatDouble(r.ssp_utility) << ','
        << FormatDouble(r.mean_winner_latency_s) << '\n';
  }
}

void EmitCsv(const std::vector<MetricsRow>& rows, const std::string& path) {
  if (rows.empty()) {
    throw Error(ErrorCode::kInvalidParameter, "no rows to write");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  WriteCsv(rows, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

std::vector<MetricsRow> ParseCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != CsvHeader()) {
    throw Error(ErrorCode::kIo, "missing or unexpected CSV header");
  }
  std::vector<MetricsRow> rows;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const auto f = SplitCommas(line);
    if (f.size() != std::size(kCsvColumns)) {
      throw Error(ErrorCode::kIo,
                  "line " + std::to_string(line_number) + ": expected " +
                      std::to_string(std::size(kCsvColumns)) + " fields");
    }
    MetricsRow r;
    r.seed = ParseNumber<std::uint64_t>(f[0], line_number);
    r.budget = ParseNumber<int>(f[1], line_number);
    if (f[2] != "on" && f[2] != "off") {
      throw Error(ErrorCode::kIo, "line " + std::to_string(line_number) +
                                      ": compression must be on/off");
    }
    r.compression = f[2] == "on";
    try {
      r.payment_rule = ParsePaymentRule(f[3]);
    } catch (const Error& e) {
      throw Error(ErrorCode::kIo, e.what());
    }
    r.winner_count = ParseNumber<int>(f[4], line_number);
    r.social_welfare = ParseNumber<double>(f[5], line_number);
    r.total_device_utility = ParseNumber<double>(f[6], line_number);
    r.ssp_utility = ParseNumber<double>(f[7], line_number);
    r.mean_winner_latency_s = ParseNumber<double>(f[8], line_number);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace spectrum
