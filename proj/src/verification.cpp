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

#include "spectrum/verification.hpp"

#include <cmath>
#include <sstream>

namespace spectrum {
namespace {

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::string Describe(const AuctionInstance& instance) {
  std::ostringstream out;
  out << "B=" << instance.budget << " bids/demands:";
  for (std::size_t i = 0; i < instance.size(); ++i) {
    out << " (" << instance.bids[i] << "," << instance.demands[i] << ")";
  }
  return out.str();
}

double Utility(double true_net, const WdpResult& wdp,
               const std::vector<double>& payments, std::size_t i) {
  return wdp.allocation[i] ? true_net - payments[i] : 0.0;
}

}  // namespace

const std::vector<double>& MisreportGrid() {
  static const std::vector<double> grid{-0.9, -0.7, -0.5, -0.3, -0.1,
                                        0.1,  0.3,  0.5,  0.7,  0.9};
  return grid;
}

AuctionInstance RandomInstance(std::mt19937_64& rng, int max_devices,
                               int max_budget) {
  AuctionInstance instance;
  const int n = UniformInt(rng, 0, max_devices);
  const bool integral = UniformInt(rng, 0, 1) == 0;
  for (int i = 0; i < n; ++i) {
    instance.demands.push_back(UniformInt(rng, 1, 10));
    instance.bids.push_back(
        integral ? static_cast<double>(UniformInt(rng, -5, 30))
                 : std::uniform_real_distribution<double>(-20.0, 100.0)(rng));
  }
  instance.budget = UniformInt(rng, 0, max_budget);
  instance.ssp_cost = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
  return instance;
}

CheckResult CheckOracleEquivalence(const VerifyOptions& options) {
  CheckResult result;
  result.name = "oracle-equivalence";
  std::mt19937_64 rng(options.seed);
  for (int t = 0; t < options.instances; ++t) {
    const auto instance =
        RandomInstance(rng, options.max_devices, options.max_budget);
    const auto fast = SolveWdp(instance);
    const auto slow = WdpBruteforce(instance);
    ++result.cases;
    if (fast.objective != slow.objective || fast.winners != slow.winners) {
      result.passed = false;
      result.detail = Describe(instance);
      break;
    }
  }
  return result;
}

CheckResult CheckIncentiveCompatibility(const VerifyOptions& options) {
  CheckResult result;
  result.name = "incentive-compatibility";
  std::mt19937_64 rng(options.seed + 1);
  for (int t = 0; t < options.instances && result.passed; ++t) {
    const auto truthful =
        RandomInstance(rng, options.max_devices, options.max_budget);
    const auto wdp = SolveWdp(truthful);
    const auto payments = VcgPayments(truthful, wdp, VcgMode::kClarkePivot);
    for (std::size_t i = 0; i < truthful.size() && result.passed; ++i) {
      const double value = truthful.bids[i];
      const double honest = Utility(value, wdp, payments, i);
      for (double delta : MisreportGrid()) {
        AuctionInstance lie = truthful;
        lie.bids[i] = value == 0.0 ? delta : value * (1.0 + delta);
        const auto lie_wdp = SolveWdp(lie);
        const auto lie_pay = VcgPayments(lie, lie_wdp, VcgMode::kClarkePivot);
        const double misreport = Utility(value, lie_wdp, lie_pay, i);
        ++result.cases;
        if (honest < misreport - options.tolerance) {
          std::ostringstream out;
          out << "device " << i << " gains " << misreport - honest
              << " by reporting " << lie.bids[i] << "; " << Describe(truthful);
          result.passed = false;
          result.detail = out.str();
          break;
        }
      }
    }
  }
  return result;
}

CheckResult CheckIndividualRationality(const VerifyOptions& options) {
  CheckResult result;
  result.name = "individual-rationality";
  std::mt19937_64 rng(options.seed + 1);
  for (int t = 0; t < options.instances && result.passed; ++t) {
    const auto instance =
        RandomInstance(rng, options.max_devices, options.max_budget);
    const auto wdp = SolveWdp(instance);
    const auto payments = VcgPayments(instance, wdp, VcgMode::kClarkePivot);
    std::vector<ValuationBreakdown> valuations;
    for (double b : instance.bids) {
      valuations.push_back(ValuationBreakdown::FromNetValue(b));
    }
    const auto outcome = Settle(instance, wdp, valuations, payments,
                                PaymentRule::kClarkePivot);
    for (std::size_t i = 0; i < instance.size(); ++i) {
      ++result.cases;
      const double u = outcome.device_utilities[i];
      const bool ok = wdp.allocation[i]
                          ? (u >= 0.0 && payments[i] <= instance.bids[i])
                          : (u == 0.0 && payments[i] == 0.0);
      if (!ok) {
        std::ostringstream out;
        out << "device " << i << " utility " << u << "; "
            << Describe(instance);
        result.passed = false;
        result.detail = out.str();
        break;
      }
    }
  }
  return result;
}

CheckResult CheckAccountingIdentity(const VerifyOptions& options) {
  CheckResult result;
  result.name = "accounting-identity";
  std::mt19937_64 rng(options.seed + 2);
  const PaymentRule rules[] = {PaymentRule::kClarkePivot,
                               PaymentRule::kWelfareDifference,
                               PaymentRule::kClearingLowestWinningBid,
                               PaymentRule::kClearingHighestLosingBid};
  for (int t = 0; t < options.instances && result.passed; ++t) {
    const auto instance =
        RandomInstance(rng, options.max_devices, options.max_budget);
    const auto wdp = SolveWdp(instance);
    std::vector<ValuationBreakdown> valuations;
    for (double b : instance.bids) {
      valuations.push_back(ValuationBreakdown::FromNetValue(b));
    }
    for (PaymentRule rule : rules) {
      const auto payments = Payments(instance, wdp, rule);
      const auto outcome = Settle(instance, wdp, valuations, payments, rule);
      double total = outcome.ssp_utility;
      for (std::size_t i = 0; i < instance.size(); ++i) {
        if (outcome.allocation[i]) total += outcome.device_utilities[i];
      }
      ++result.cases;
      if (std::abs(outcome.social_welfare - total) > options.tolerance) {
        std::ostringstream out;
        out << PaymentRuleName(rule) << ": SW " << outcome.social_welfare
            << " vs " << total << "; " << Describe(instance);
        result.passed = false;
        result.detail = out.str();
        break;
      }
    }
  }
  return result;
}

std::vector<CheckResult> RunVerification(const VerifyOptions& options) {
  return {CheckOracleEquivalence(options), CheckIncentiveCompatibility(options),
          CheckIndividualRationality(options),
          CheckAccountingIdentity(options)};
}

}  // namespace spectrum
