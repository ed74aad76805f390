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

// Sealed-bid spectrum auction for single-minded bidders: winner determination
// as a 0/1 knapsack over the channel budget, VCG and uniform clearing prices,
// and settlement of utilities and social welfare.
//
// Tie-breaking, shared by the solver and the brute-force oracle: higher
// objective first, then fewer channels used, then the lexicographically
// smallest list of winner indices. Objectives are accumulated in increasing
// index order in both, so equal sets produce bit-identical objectives.

#ifndef SPECTRUM_AUCTION_CORE_HPP_
#define SPECTRUM_AUCTION_CORE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spectrum/valuation.hpp"

namespace spectrum {

struct AuctionInstance {
  std::vector<double> bids;  // reported net values
  std::vector<int> demands;  // channels requested, >= 1
  int budget = 0;            // channels offered by the provider
  double ssp_cost = 0.0;     // provider's service cost

  std::size_t size() const { return bids.size(); }
  // Throws Error(kStructural) or Error(kInvalidParameter).
  void Validate() const;

  friend bool operator==(const AuctionInstance&,
                         const AuctionInstance&) = default;
};

struct WdpResult {
  std::vector<bool> allocation;
  std::vector<int> winners;  // ascending indices
  double objective = 0.0;    // sum of winning bids
  // objective - ssp_cost. The provider's cost enters welfare with a minus
  // sign; it never changes the argmax.
  double objective_with_ssp_cost = 0.0;
  int channels_used = 0;

  friend bool operator==(const WdpResult&, const WdpResult&) = default;
};

// Exact dynamic program over the channel budget, O(N * B). Devices with a
// non-positive bid never win.
WdpResult SolveWdp(const AuctionInstance& instance);
// Same, with device `excluded` removed from the market.
WdpResult SolveWdp(const AuctionInstance& instance,
                   std::optional<std::size_t> excluded);

inline constexpr std::size_t kBruteforceMaxDevices = 20;

// Enumerates all 2^N allocations. Throws Error(kOracleSize) for N > 20.
WdpResult WdpBruteforce(const AuctionInstance& instance);

enum class VcgMode {
  kClarkePivot,   // p_k = W_{-k} - (W* - b_k)
  kWelfareDifference,  // p_k = W* - W_{-k}
};

enum class ClearingVariant { kLowestWinningBid, kHighestLosingBid };

enum class PaymentRule {
  kClarkePivot,
  kWelfareDifference,
  kClearingLowestWinningBid,
  kClearingHighestLosingBid,
};

std::string_view PaymentRuleName(PaymentRule rule);
// Throws Error(kConfig) on an unknown name.
PaymentRule ParsePaymentRule(std::string_view name);
std::string_view ClearingVariantName(ClearingVariant variant);
ClearingVariant ParseClearingVariant(std::string_view name);
PaymentRule ClearingRule(ClearingVariant variant);

std::vector<double> VcgPayments(const AuctionInstance& instance,
                                const WdpResult& wdp, VcgMode mode);
std::vector<double> VcgPayments(const AuctionInstance& instance, VcgMode mode);

// Every winner pays one price; losers pay nothing. The highest losing bid
// is floored at zero, so it is zero when nobody loses.
std::vector<double> ClearingPayments(const AuctionInstance& instance,
                                     const WdpResult& wdp,
                                     ClearingVariant variant);
std::vector<double> ClearingPayments(const AuctionInstance& instance,
                                     ClearingVariant variant);

std::vector<double> Payments(const AuctionInstance& instance,
                             const WdpResult& wdp, PaymentRule rule);

struct AuctionOutcome {
  std::vector<bool> allocation;
  std::vector<double> payments;
  double social_welfare = 0.0;
  std::vector<double> device_utilities;
  double ssp_utility = 0.0;
  PaymentRule payment_rule = PaymentRule::kClarkePivot;

  int winner_count() const;
  double total_device_utility() const;
};

// u_i = v_i - p_i - c_i for winners and 0 for losers,
// u_ssp = sum(p_i) - c_ssp, SW = sum over winners of (v_i - c_i) - c_ssp.
AuctionOutcome Settle(const AuctionInstance& instance, const WdpResult& wdp,
                      std::span<const ValuationBreakdown> valuations,
                      std::span<const double> payments, PaymentRule rule);

}  // namespace spectrum

#endif  // SPECTRUM_AUCTION_CORE_HPP_
