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

#include "spectrum/auction_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "spectrum/error.hpp"

namespace spectrum {
namespace {

struct Candidate {
  double value = 0.0;
  int channels = 0;
  std::vector<int> ids;
};

// Strict "a is preferred to b" under the shared tie-break.
bool Preferred(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.channels != b.channels) return a.channels < b.channels;
  return std::lexicographical_compare(a.ids.begin(), a.ids.end(),
                                      b.ids.begin(), b.ids.end());
}

WdpResult ToResult(const AuctionInstance& instance, Candidate best) {
  WdpResult result;
  result.allocation.assign(instance.size(), false);
  for (int id : best.ids) result.allocation[static_cast<std::size_t>(id)] = true;
  result.winners = std::move(best.ids);
  result.objective = best.value;
  result.objective_with_ssp_cost = best.value - instance.ssp_cost;
  result.channels_used = best.channels;
  return result;
}

double SumOfBids(const AuctionInstance& instance, std::span<const int> ids,
                 std::optional<int> skip = std::nullopt) {
  double total = 0.0;
  for (int id : ids) {
    if (skip && id == *skip) continue;
    total += instance.bids[static_cast<std::size_t>(id)];
  }
  return total;
}

}  // namespace

void AuctionInstance::Validate() const {
  if (bids.size() != demands.size()) {
    throw Error(ErrorCode::kStructural, "bids and demands differ in length");
  }
  for (double b : bids) {
    if (!std::isfinite(b)) {
      throw Error(ErrorCode::kInvalidParameter, "bids must be finite");
    }
  }
  for (int d : demands) {
    if (d < 1) {
      throw Error(ErrorCode::kInvalidParameter, "demands must be >= 1");
    }
  }
  if (budget < 0) {
    throw Error(ErrorCode::kInvalidParameter, "budget must be >= 0");
  }
  if (!std::isfinite(ssp_cost) || ssp_cost < 0.0) {
    throw Error(ErrorCode::kInvalidParameter,
                "provider cost must be finite and non-negative");
  }
}

WdpResult SolveWdp(const AuctionInstance& instance) {
  return SolveWdp(instance, std::nullopt);
}

WdpResult SolveWdp(const AuctionInstance& instance,
                   std::optional<std::size_t> excluded) {
  instance.Validate();
  const std::size_t n = instance.size();
  auto eligible = [&](std::size_t i) {
    return instance.bids[i] > 0.0 && !(excluded && *excluded == i) &&
           instance.demands[i] <= instance.budget;
  };

  // Channels beyond the total eligible demand can never be used.
  std::int64_t total_demand = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (eligible(i)) total_demand += instance.demands[i];
  }
  const int cap = static_cast<int>(
      std::min<std::int64_t>(instance.budget, total_demand));

  // best[c]: preferred set using exactly c channels, over the devices seen.
  std::vector<std::optional<Candidate>> best(static_cast<std::size_t>(cap) + 1);
  best[0] = Candidate{};
  for (std::size_t i = 0; i < n; ++i) {
    if (!eligible(i)) continue;
    const int demand = instance.demands[i];
    for (int c = cap; c >= demand; --c) {
      const auto& base = best[static_cast<std::size_t>(c - demand)];
      if (!base) continue;
      Candidate next;
      next.value = base->value + instance.bids[i];
      next.channels = c;
      next.ids.reserve(base->ids.size() + 1);
      next.ids = base->ids;
      next.ids.push_back(static_cast<int>(i));
      auto& slot = best[static_cast<std::size_t>(c)];
      if (!slot || Preferred(next, *slot)) slot = std::move(next);
    }
  }

  const Candidate* winner = nullptr;
  for (const auto& slot : best) {
    if (slot && (!winner || Preferred(*slot, *winner))) winner = &*slot;
  }
  return ToResult(instance, *winner);
}

WdpResult WdpBruteforce(const AuctionInstance& instance) {
  instance.Validate();
  const std::size_t n = instance.size();
  if (n > kBruteforceMaxDevices) {
    throw Error(ErrorCode::kOracleSize,
                "brute-force oracle limited to " +
                    std::to_string(kBruteforceMaxDevices) + " devices, got " +
                    std::to_string(n));
  }
  Candidate best;
  Candidate current;
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    current.ids.clear();
    current.value = 0.0;
    current.channels = 0;
    bool admissible = true;
    for (std::size_t i = 0; i < n && admissible; ++i) {
      if (!(mask & (1u << i))) continue;
      if (instance.bids[i] <= 0.0) admissible = false;
      current.ids.push_back(static_cast<int>(i));
      current.value += instance.bids[i];
      current.channels += instance.demands[i];
      if (current.channels > instance.budget) admissible = false;
    }
    if (admissible && Preferred(current, best)) best = current;
  }
  return ToResult(instance, std::move(best));
}

std::string_view PaymentRuleName(PaymentRule rule) {
  switch (rule) {
    case PaymentRule::kClarkePivot: return "clarke-pivot";
    case PaymentRule::kWelfareDifference: return "welfare-difference";
    case PaymentRule::kClearingLowestWinningBid:
      return "clearing-lowest-winning-bid";
    case PaymentRule::kClearingHighestLosingBid:
      return "clearing-highest-losing-bid";
  }
  return "unknown";
}

PaymentRule ParsePaymentRule(std::string_view name) {
  for (PaymentRule rule :
       {PaymentRule::kClarkePivot, PaymentRule::kWelfareDifference,
        PaymentRule::kClearingLowestWinningBid,
        PaymentRule::kClearingHighestLosingBid}) {
    if (PaymentRuleName(rule) == name) return rule;
  }
  throw Error(ErrorCode::kConfig,
              "unknown payment rule '" + std::string(name) + "'");
}

std::string_view ClearingVariantName(ClearingVariant variant) {
  return variant == ClearingVariant::kLowestWinningBid ? "lowest-winning-bid"
                                                       : "highest-losing-bid";
}

ClearingVariant ParseClearingVariant(std::string_view name) {
  if (name == "lowest-winning-bid") return ClearingVariant::kLowestWinningBid;
  if (name == "highest-losing-bid") return ClearingVariant::kHighestLosingBid;
  throw Error(ErrorCode::kConfig,
              "unknown clearing variant '" + std::string(name) + "'");
}

PaymentRule ClearingRule(ClearingVariant variant) {
  return variant == ClearingVariant::kLowestWinningBid
             ? PaymentRule::kClearingLowestWinningBid
             : PaymentRule::kClearingHighestLosingBid;
}

std::vector<double> VcgPayments(const AuctionInstance& instance,
                                const WdpResult& wdp, VcgMode mode) {
  std::vector<double> payments(instance.size(), 0.0);
  for (int k : wdp.winners) {
    const double without_k =
        SolveWdp(instance, static_cast<std::size_t>(k)).objective;
    if (mode == VcgMode::kClarkePivot) {
      // W* - b_k, summed directly so that it matches how the solver scores
      // the same set.
      const double others = SumOfBids(instance, wdp.winners, k);
      payments[static_cast<std::size_t>(k)] = without_k - others;
    } else {
      payments[static_cast<std::size_t>(k)] = wdp.objective - without_k;
    }
  }
  return payments;
}

std::vector<double> VcgPayments(const AuctionInstance& instance,
                                VcgMode mode) {
  return VcgPayments(instance, SolveWdp(instance), mode);
}

std::vector<double> ClearingPayments(const AuctionInstance& instance,
                                     const WdpResult& wdp,
                                     ClearingVariant variant) {
  std::vector<double> payments(instance.size(), 0.0);
  if (wdp.winners.empty()) return payments;
  double price = 0.0;
  if (variant == ClearingVariant::kLowestWinningBid) {
    price = instance.bids[static_cast<std::size_t>(wdp.winners.front())];
    for (int k : wdp.winners) {
      price = std::min(price, instance.bids[static_cast<std::size_t>(k)]);
    }
  } else {
    for (std::size_t i = 0; i < instance.size(); ++i) {
      if (!wdp.allocation[i]) price = std::max(price, instance.bids[i]);
    }
  }
  for (int k : wdp.winners) payments[static_cast<std::size_t>(k)] = price;
  return payments;
}

std::vector<double> ClearingPayments(const AuctionInstance& instance,
                                     ClearingVariant variant) {
  return ClearingPayments(instance, SolveWdp(instance), variant);
}

std::vector<double> Payments(const AuctionInstance& instance,
                             const WdpResult& wdp, PaymentRule rule) {
  switch (rule) {
    case PaymentRule::kClarkePivot:
      return VcgPayments(instance, wdp, VcgMode::kClarkePivot);
    case PaymentRule::kWelfareDifference:
      return VcgPayments(instance, wdp, VcgMode::kWelfareDifference);
    case PaymentRule::kClearingLowestWinningBid:
      return ClearingPayments(instance, wdp, ClearingVariant::kLowestWinningBid);
    case PaymentRule::kClearingHighestLosingBid:
      return ClearingPayments(instance, wdp,
                              ClearingVariant::kHighestLosingBid);
  }
  throw Error(ErrorCode::kConfig, "unhandled payment rule");
}

int AuctionOutcome::winner_count() const {
  return static_cast<int>(std::count(allocation.begin(), allocation.end(), true));
}

double AuctionOutcome::total_device_utility() const {
  return std::accumulate(device_utilities.begin(), device_utilities.end(), 0.0);
}

AuctionOutcome Settle(const AuctionInstance& instance, const WdpResult& wdp,
                      std::span<const ValuationBreakdown> valuations,
                      std::span<const double> payments, PaymentRule rule) {
  const std::size_t n = instance.size();
  if (wdp.allocation.size() != n || valuations.size() != n ||
      payments.size() != n) {
    throw Error(ErrorCode::kStructural,
                "allocation, valuations and payments must all have one entry "
                "per device");
  }
  AuctionOutcome outcome;
  outcome.allocation = wdp.allocation;
  outcome.payments.assign(payments.begin(), payments.end());
  outcome.device_utilities.assign(n, 0.0);
  outcome.payment_rule = rule;

  double payments_received = 0.0;
  double surplus = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!wdp.allocation[i]) {
      if (payments[i] != 0.0) {
        throw Error(ErrorCode::kInvariantViolation,
                    "losing device " + std::to_string(i) + " has a payment");
      }
      continue;
    }
    const auto& v = valuations[i];
    outcome.device_utilities[i] = v.total_value - payments[i] - v.total_cost;
    payments_received += payments[i];
    surplus += v.total_value - v.total_cost;
  }
  outcome.ssp_utility = payments_received - instance.ssp_cost;
  outcome.social_welfare = surplus - instance.ssp_cost;
  return outcome;
}

}  // namespace spectrum
