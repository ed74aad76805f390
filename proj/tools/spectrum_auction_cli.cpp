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

// spectrum-auction: population generation, scenario runs, budget sweeps,
// payment-rule comparisons and property verification.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spectrum/config_io.hpp"
#include "spectrum/error.hpp"
#include "spectrum/experiment_harness.hpp"
#include "spectrum/verification.hpp"

namespace {

using namespace spectrum;

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<std::string> payment;
  std::optional<std::string> clearing_variant;
  std::optional<std::string> compression;
  std::optional<int> replications;
  std::optional<int> threads;
};

void AddCommonFlags(CLI::App* cmd, CommonFlags& flags, bool payment = true) {
  cmd->add_option("--config", flags.config_path, "Scenario config (JSON)");
  cmd->add_option("--seed", flags.seed, "Base seed (overrides config)");
  cmd->add_option("--out", flags.out, "Output path (overrides config)");
  if (payment) {
    cmd->add_option("--payment", flags.payment, "Payment rule")
        ->check(CLI::IsMember({"clarke-pivot", "welfare-difference", "clearing"}));
  }
  cmd->add_option("--clearing-variant", flags.clearing_variant,
                  "Clearing price variant")
      ->check(CLI::IsMember({"lowest-winning-bid", "highest-losing-bid"}));
  cmd->add_option("--compression", flags.compression, "Compression setting")
      ->check(CLI::IsMember({"on", "off", "both"}));
  cmd->add_option("--replications", flags.replications,
                  "Number of seeds (overrides config)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", flags.threads, "Worker threads, 0 = auto")
      ->check(CLI::NonNegativeNumber);
}

ScenarioConfig ResolveConfig(const CommonFlags& flags) {
  ScenarioConfig config;
  if (!flags.config_path.empty()) {
    config = LoadScenarioConfig(flags.config_path);
  }
  if (flags.seed) config.base_seed = *flags.seed;
  if (!flags.out.empty()) config.output_path = flags.out;
  if (flags.clearing_variant) {
    config.clearing_variant = ParseClearingVariant(*flags.clearing_variant);
  }
  if (flags.compression) {
    config.compression = ParseCompressionSetting(*flags.compression);
  }
  if (flags.payment) {
    config.payment_rules = {*flags.payment == "clearing"
                                ? ClearingRule(config.clearing_variant)
                                : ParsePaymentRule(*flags.payment)};
  }
  if (flags.replications) config.replications = *flags.replications;
  if (flags.threads) config.threads = *flags.threads;
  config.Validate();
  return config;
}

void WriteOutputs(const std::vector<MetricsRow>& rows,
                  const ScenarioConfig& config, std::string_view command) {
  EmitCsv(rows, config.output_path);
  WriteJsonFile(RunMetadata(config, command), config.output_path + ".meta.json");
}

void PrintSummary(const std::vector<MetricsRow>& rows) {
  std::cout << std::left << std::setw(8) << "budget" << std::setw(13)
            << "compression" << std::setw(30) << "payment_rule" << std::right
            << std::setw(9) << "winners" << std::setw(16) << "welfare"
            << std::setw(16) << "device_util" << std::setw(16) << "ssp_util"
            << '\n';
  for (const auto& s : Summarize(rows)) {
    std::cout << std::left << std::setw(8) << s.budget << std::setw(13)
              << (s.compression ? "on" : "off") << std::setw(30)
              << PaymentRuleName(s.payment_rule) << std::right << std::fixed
              << std::setprecision(2) << std::setw(9) << s.mean_winner_count
              << std::setprecision(4) << std::scientific << std::setw(16)
              << s.mean_social_welfare << std::setw(16)
              << s.mean_device_utility << std::setw(16) << s.mean_ssp_utility
              << std::defaultfloat << '\n';
  }
}

void ReportError(std::string_view code, std::string_view message) {
  nlohmann::json line = {{"error", code}, {"message", message}};
  std::cerr << line.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compression-aware spectrum auction simulator"};
  app.require_subcommand(1);

  CommonFlags generate_flags, run_flags, sweep_flags, compare_flags;
  auto* generate = app.add_subcommand("generate", "Write a device population");
  AddCommonFlags(generate, generate_flags, false);
  auto* run = app.add_subcommand("run", "Run one scenario to CSV");
  AddCommonFlags(run, run_flags);
  auto* sweep = app.add_subcommand(
      "sweep", "Channel-budget sweep with and without compression");
  AddCommonFlags(sweep, sweep_flags);
  auto* compare = app.add_subcommand(
      "compare", "Clarke-pivot VCG against another payment rule");
  AddCommonFlags(compare, compare_flags);

  auto* verify = app.add_subcommand(
      "verify", "Oracle equivalence, IC, IR and accounting property checks");
  VerifyOptions verify_options;
  verify->add_option("--seed", verify_options.seed, "Seed");
  verify->add_option("--instances", verify_options.instances,
                     "Random instances per check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-devices", verify_options.max_devices)
      ->check(CLI::Range(0, static_cast<int>(kBruteforceMaxDevices)));
  verify->add_option("--max-budget", verify_options.max_budget)
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    ReportError("usage", e.what());
    return 2;
  }

  try {
    if (*generate) {
      ScenarioConfig config = ResolveConfig(generate_flags);
      if (generate_flags.out.empty()) config.output_path = "population.json";
      PopulationConfig population = config.population;
      population.seed = config.base_seed;
      WriteJsonFile(PopulationDocument(GeneratePopulation(population),
                                       population.seed),
                    config.output_path);
      std::cout << "wrote " << population.device_count << " devices to "
                << config.output_path << '\n';
    } else if (*run) {
      const ScenarioConfig config = ResolveConfig(run_flags);
      const auto rows = RunScenario(config);
      WriteOutputs(rows, config, "run");
      std::cout << "wrote " << rows.size() << " rows to " << config.output_path
                << '\n';
    } else if (*sweep) {
      CommonFlags flags = sweep_flags;
      if (!flags.compression) flags.compression = "both";
      const ScenarioConfig config = ResolveConfig(flags);
      const auto rows = RunScenario(config);
      WriteOutputs(rows, config, "sweep");
      PrintSummary(rows);
    } else if (*compare) {
      CommonFlags flags = compare_flags;
      if (!flags.compression) flags.compression = "on";
      std::optional<std::string> challenger = flags.payment;
      flags.payment.reset();
      ScenarioConfig config = ResolveConfig(flags);
      if (challenger) {
        const PaymentRule rule = *challenger == "clearing"
                                     ? ClearingRule(config.clearing_variant)
                                     : ParsePaymentRule(*challenger);
        if (rule == PaymentRule::kClarkePivot) {
          throw Error(ErrorCode::kConfig,
                      "--payment must name a rule other than clarke-pivot");
        }
        config.payment_rules = {PaymentRule::kClarkePivot, rule};
      } else if (config.payment_rules.size() < 2) {
        config.payment_rules = {PaymentRule::kClarkePivot,
                                ClearingRule(config.clearing_variant)};
      }
      const auto rows = ComparePaymentRules(config);
      WriteOutputs(rows, config, "compare");
      PrintSummary(rows);
    } else if (*verify) {
      bool all_passed = true;
      for (const auto& check : RunVerification(verify_options)) {
        std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << " ("
                  << check.cases << " cases)";
        if (!check.passed) std::cout << ": " << check.detail;
        std::cout << '\n';
        all_passed = all_passed && check.passed;
      }
      if (!all_passed) {
        ReportError("verification-failed", "one or more property checks failed");
        return 1;
      }
    }
  } catch (const Error& e) {
    ReportError(ErrorCodeName(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    ReportError("internal", e.what());
    return 1;
  }
  return 0;
}
