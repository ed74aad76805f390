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

#include "spectrum/config_io.hpp"

#include <fstream>
#include <set>
#include <string_view>

#include "spectrum/error.hpp"

namespace spectrum {
namespace {

using nlohmann::json;

[[noreturn]] void Bad(const std::string& where, const std::string& why) {
  throw Error(ErrorCode::kConfig, where + ": " + why);
}

// Reads optional keys from a JSON object and rejects keys nobody asked for.
class ObjectReader {
 public:
  ObjectReader(const json& doc, std::string where)
      : doc_(doc), where_(std::move(where)) {
    if (!doc_.is_object()) Bad(where_, "expected an object");
  }

  const json* Find(const std::string& key) {
    seen_.insert(key);
    auto it = doc_.find(key);
    return it == doc_.end() ? nullptr : &*it;
  }

  std::string Path(const std::string& key) const { return where_ + "." + key; }

  template <typename T>
  void Read(const std::string& key, T& out) {
    if (const json* v = Find(key)) {
      try {
        if constexpr (std::is_same_v<T, bool>) {
          if (!v->is_boolean()) Bad(Path(key), "expected a boolean");
        } else if constexpr (std::is_arithmetic_v<T>) {
          if (!v->is_number()) Bad(Path(key), "expected a number");
          if constexpr (std::is_integral_v<T>) {
            if (!v->is_number_integer()) Bad(Path(key), "expected an integer");
            if constexpr (std::is_unsigned_v<T>) {
              if (v->is_number_integer() && !v->is_number_unsigned()) {
                Bad(Path(key), "expected a non-negative integer");
              }
            }
          }
        } else if constexpr (std::is_same_v<T, std::string>) {
          if (!v->is_string()) Bad(Path(key), "expected a string");
        }
        out = v->get<T>();
      } catch (const json::exception& e) {
        Bad(Path(key), e.what());
      }
    }
  }

  void ReadRange(const std::string& key, Range& out) {
    const json* v = Find(key);
    if (!v) return;
    if (v->is_number()) {
      out = Range::Constant(v->get<double>());
    } else if (v->is_array() && v->size() == 2 && (*v)[0].is_number() &&
               (*v)[1].is_number()) {
      out = {(*v)[0].get<double>(), (*v)[1].get<double>()};
    } else {
      Bad(Path(key), "expected a number or a [min, max] pair");
    }
  }

  void Finish() const {
    for (const auto& [key, value] : doc_.items()) {
      if (!seen_.count(key)) Bad(where_, "unknown key '" + key + "'");
    }
  }

 private:
  const json& doc_;
  std::string where_;
  std::set<std::string> seen_;
};

json RangeJson(const Range& r) {
  if (r.min == r.max) return r.min;
  return json::array({r.min, r.max});
}

RateAccuracyCurve CurveFromJson(const json& doc, const std::string& where) {
  if (!doc.is_array()) Bad(where, "expected an array of [ratio, accuracy]");
  std::vector<RateAccuracyPoint> anchors;
  for (const auto& p : doc) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number()) {
      Bad(where, "each anchor must be a [ratio, accuracy] pair");
    }
    anchors.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  try {
    return RateAccuracyCurve(std::move(anchors));
  } catch (const Error& e) {
    Bad(where, e.what());
  }
}

json CurveJson(const RateAccuracyCurve& curve) {
  json anchors = json::array();
  for (const auto& p : curve.anchors()) {
    anchors.push_back(json::array({p.ratio, p.accuracy}));
  }
  return anchors;
}

}  // namespace

PopulationConfig PopulationConfigFromJson(const json& doc) {
  PopulationConfig c;
  ObjectReader r(doc, "population");
  r.Read("device_count", c.device_count);
  r.Read("seed", c.seed);
  r.ReadRange("raw_size_bits", c.raw_size_bits);
  r.ReadRange("fill_rate_inverse_s", c.fill_rate_inverse_s);
  r.ReadRange("queue_size", c.queue_size);
  r.ReadRange("bandwidth_per_channel_hz", c.bandwidth_per_channel_hz);
  r.ReadRange("channel_gain", c.channel_gain);
  r.ReadRange("transmit_power_w", c.transmit_power_w);
  r.ReadRange("noise_psd", c.noise_psd);
  if (const json* w = r.Find("weights")) {
    ObjectReader wr(*w, "population.weights");
    wr.ReadRange("size", c.weight_size);
    wr.ReadRange("latency", c.weight_latency);
    wr.ReadRange("accuracy", c.weight_accuracy);
    wr.Finish();
  }
  r.ReadRange("energy_cost_per_unit", c.energy_cost_per_unit);
  r.ReadRange("latency_requirement_s", c.latency_requirement_s);
  if (const json* comp = r.Find("compression")) {
    ObjectReader cr(*comp, "population.compression");
    cr.ReadRange("ratio", c.compression_ratio);
    if (const json* curve = cr.Find("curve")) {
      c.curve = CurveFromJson(*curve, "population.compression.curve");
    }
    std::string interpolation = "piecewise-linear";
    cr.Read("interpolation", interpolation);
    if (interpolation != "piecewise-linear") {
      Bad("population.compression.interpolation",
          "only piecewise-linear is supported");
    }
    cr.Read("compute_cost_coefficient", c.compute_cost_coefficient);
    cr.Finish();
  }
  r.Finish();
  c.Validate();
  return c;
}

json ToJson(const PopulationConfig& c) {
  return {
      {"device_count", c.device_count},
      {"seed", c.seed},
      {"raw_size_bits", RangeJson(c.raw_size_bits)},
      {"fill_rate_inverse_s", RangeJson(c.fill_rate_inverse_s)},
      {"queue_size", RangeJson(c.queue_size)},
      {"bandwidth_per_channel_hz", RangeJson(c.bandwidth_per_channel_hz)},
      {"channel_gain", RangeJson(c.channel_gain)},
      {"transmit_power_w", RangeJson(c.transmit_power_w)},
      {"noise_psd", RangeJson(c.noise_psd)},
      {"weights",
       {{"size", RangeJson(c.weight_size)},
        {"latency", RangeJson(c.weight_latency)},
        {"accuracy", RangeJson(c.weight_accuracy)}}},
      {"energy_cost_per_unit", RangeJson(c.energy_cost_per_unit)},
      {"latency_requirement_s", RangeJson(c.latency_requirement_s)},
      {"compression",
       {{"ratio", RangeJson(c.compression_ratio)},
        {"curve", CurveJson(c.curve)},
        {"interpolation", "piecewise-linear"},
        {"compute_cost_coefficient", c.compute_cost_coefficient}}},
  };
}

ScenarioConfig ScenarioConfigFromJson(const json& doc) {
  ScenarioConfig c;
  ObjectReader r(doc, "config");
  if (!r.Find("schema_version")) Bad("config", "missing schema_version");
  r.Read("schema_version", c.schema_version);
  if (const json* p = r.Find("population")) {
    c.population = PopulationConfigFromJson(*p);
  }
  if (const json* b = r.Find("budgets")) {
    if (!b->is_array()) Bad("config.budgets", "expected an array");
    c.budgets.clear();
    for (const auto& v : *b) {
      if (!v.is_number_integer()) Bad("config.budgets", "expected integers");
      c.budgets.push_back(v.get<int>());
    }
  }
  if (const json* v = r.Find("compression")) {
    if (!v->is_string()) Bad("config.compression", "expected a string");
    c.compression = ParseCompressionSetting(v->get<std::string>());
  }
  if (const json* v = r.Find("clearing_variant")) {
    if (!v->is_string()) Bad("config.clearing_variant", "expected a string");
    c.clearing_variant = ParseClearingVariant(v->get<std::string>());
  }
  if (const json* rules = r.Find("payment_rules")) {
    if (!rules->is_array()) Bad("config.payment_rules", "expected an array");
    c.payment_rules.clear();
    for (const auto& v : *rules) {
      if (!v.is_string()) Bad("config.payment_rules", "expected strings");
      const auto name = v.get<std::string>();
      c.payment_rules.push_back(name == "clearing"
                                    ? ClearingRule(c.clearing_variant)
                                    : ParsePaymentRule(name));
    }
  }
  r.Read("normalize_gain", c.normalize_gain);
  r.Read("ssp_cost", c.ssp_cost);
  r.Read("replications", c.replications);
  r.Read("base_seed", c.base_seed);
  r.Read("output", c.output_path);
  r.Read("threads", c.threads);
  r.Finish();
  c.Validate();
  return c;
}

json ToJson(const ScenarioConfig& c) {
  json rules = json::array();
  for (PaymentRule rule : c.payment_rules) rules.push_back(PaymentRuleName(rule));
  return {
      {"schema_version", c.schema_version},
      {"population", ToJson(c.population)},
      {"budgets", c.budgets},
      {"compression", CompressionSettingName(c.compression)},
      {"payment_rules", rules},
      {"clearing_variant", ClearingVariantName(c.clearing_variant)},
      {"normalize_gain", c.normalize_gain},
      {"ssp_cost", c.ssp_cost},
      {"replications", c.replications},
      {"base_seed", c.base_seed},
      {"output", c.output_path},
      {"threads", c.threads},
  };
}

ScenarioConfig LoadScenarioConfig(const std::string& path) {
  return ScenarioConfigFromJson(ReadJsonFile(path));
}

json ToJson(const Device& d) {
  json compression = nullptr;
  if (d.compression) {
    compression = {{"ratio", d.compression->ratio},
                   {"accuracy", d.compression->accuracy},
                   {"compute_cost", d.compression->compute_cost}};
  }
  return {
      {"id", d.id},
      {"raw_size_bits", d.raw_size_bits},
      {"fill_rate_inverse_s", d.queue.fill_rate_inverse},
      {"queue_size", d.queue_size},
      {"link",
       {{"bandwidth_per_channel_hz", d.link.bandwidth_per_channel_hz},
        {"channel_gain", d.link.channel_gain},
        {"transmit_power_w", d.link.transmit_power_w},
        {"noise_psd", d.link.noise_psd}}},
      {"weights",
       {{"size", d.weights.size},
        {"latency", d.weights.latency},
        {"accuracy", d.weights.accuracy}}},
      {"energy_cost_per_unit", d.energy_cost_per_unit},
      {"latency_requirement_s", d.latency_requirement_s},
      {"compression", compression},
  };
}

Device DeviceFromJson(const json& doc) {
  Device d;
  ObjectReader r(doc, "device");
  r.Read("id", d.id);
  r.Read("raw_size_bits", d.raw_size_bits);
  r.Read("fill_rate_inverse_s", d.queue.fill_rate_inverse);
  r.Read("queue_size", d.queue_size);
  if (const json* link = r.Find("link")) {
    ObjectReader lr(*link, "device.link");
    lr.Read("bandwidth_per_channel_hz", d.link.bandwidth_per_channel_hz);
    lr.Read("channel_gain", d.link.channel_gain);
    lr.Read("transmit_power_w", d.link.transmit_power_w);
    lr.Read("noise_psd", d.link.noise_psd);
    lr.Finish();
  }
  if (const json* w = r.Find("weights")) {
    ObjectReader wr(*w, "device.weights");
    wr.Read("size", d.weights.size);
    wr.Read("latency", d.weights.latency);
    wr.Read("accuracy", d.weights.accuracy);
    wr.Finish();
  }
  r.Read("energy_cost_per_unit", d.energy_cost_per_unit);
  r.Read("latency_requirement_s", d.latency_requirement_s);
  if (const json* c = r.Find("compression"); c && !c->is_null()) {
    CompressionProfile profile;
    ObjectReader cr(*c, "device.compression");
    cr.Read("ratio", profile.ratio);
    cr.Read("accuracy", profile.accuracy);
    cr.Read("compute_cost", profile.compute_cost);
    cr.Finish();
    d.compression = profile;
  }
  r.Finish();
  try {
    d.Validate();
  } catch (const Error& e) {
    Bad("device " + std::to_string(d.id), e.what());
  }
  return d;
}

json PopulationDocument(const std::vector<Device>& devices,
                        std::uint64_t seed) {
  json list = json::array();
  for (const auto& d : devices) list.push_back(ToJson(d));
  return {{"schema_version", kScenarioSchemaVersion},
          {"seed", seed},
          {"devices", list}};
}

std::vector<Device> DevicesFromPopulationDocument(const json& doc) {
  ObjectReader r(doc, "population_file");
  int version = 0;
  r.Read("schema_version", version);
  if (version != kScenarioSchemaVersion) {
    Bad("population_file", "unsupported schema_version");
  }
  std::uint64_t seed = 0;
  r.Read("seed", seed);
  const json* list = r.Find("devices");
  if (!list || !list->is_array()) Bad("population_file", "missing devices");
  r.Finish();
  std::vector<Device> devices;
  for (const auto& d : *list) devices.push_back(DeviceFromJson(d));
  return devices;
}

json ToJson(const AuctionInstance& instance) {
  return {{"bids", instance.bids},
          {"demands", instance.demands},
          {"budget", instance.budget},
          {"ssp_cost", instance.ssp_cost}};
}

AuctionInstance AuctionInstanceFromJson(const json& doc) {
  AuctionInstance instance;
  ObjectReader r(doc, "instance");
  try {
    if (const json* b = r.Find("bids")) instance.bids = b->get<std::vector<double>>();
    if (const json* d = r.Find("demands")) {
      instance.demands = d->get<std::vector<int>>();
    }
  } catch (const json::exception& e) {
    Bad("instance", e.what());
  }
  r.Read("budget", instance.budget);
  r.Read("ssp_cost", instance.ssp_cost);
  r.Finish();
  try {
    instance.Validate();
  } catch (const Error& e) {
    Bad("instance", e.what());
  }
  return instance;
}

json AuctionRecord(const AuctionInstance& instance, const WdpResult& wdp,
                   const AuctionOutcome& outcome) {
  std::vector<int> allocation(outcome.allocation.begin(),
                              outcome.allocation.end());
  return {{"instance", ToJson(instance)},
          {"winners", wdp.winners},
          {"objective", wdp.objective},
          {"objective_with_ssp_cost", wdp.objective_with_ssp_cost},
          {"channels_used", wdp.channels_used},
          {"payment_rule", PaymentRuleName(outcome.payment_rule)},
          {"allocation", allocation},
          {"payments", outcome.payments},
          {"device_utilities", outcome.device_utilities},
          {"ssp_utility", outcome.ssp_utility},
          {"social_welfare", outcome.social_welfare}};
}

json RunMetadata(const ScenarioConfig& config, std::string_view command) {
  return {
      {"schema_version", kScenarioSchemaVersion},
      {"command", command},
      {"capacity_log_base", kCapacityLogBase},
      // Welfare subtracts the provider cost; the typeset objective adds it.
      // Winner sets are the same either way.
      {"ssp_cost_sign_in_welfare", "minus"},
      {"typeset_objective_ssp_cost_sign", "plus"},
      {"payment_rules",
       [&] {
         json rules = json::array();
         for (auto rule : config.payment_rules) {
           rules.push_back(PaymentRuleName(rule));
         }
         return rules;
       }()},
      {"clearing_variant", ClearingVariantName(config.clearing_variant)},
      {"demand_rule", "minimal channels meeting the latency requirement"},
      {"config", ToJson(config)},
  };
}

void WriteJsonFile(const json& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  out << doc.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kConfig, path + ": " + e.what());
  }
}

}  // namespace spectrum
