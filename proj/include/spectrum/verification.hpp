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

// Randomized property checks of the auction: solver vs. exhaustive oracle,
// truthfulness and individual rationality under Clarke-pivot payments, and
// the welfare accounting identity. Backs the `verify` CLI command.

#ifndef SPECTRUM_VERIFICATION_HPP_
#define SPECTRUM_VERIFICATION_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spectrum/auction_core.hpp"

namespace spectrum {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int instances = 1000;
  int max_devices = 15;
  int max_budget = 50;
  double tolerance = 1e-9;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample, if any
};

// Mix of integer-valued bids (to exercise ties) and real-valued bids, some
// negative.
AuctionInstance RandomInstance(std::mt19937_64& rng, int max_devices,
                               int max_budget);

CheckResult CheckOracleEquivalence(const VerifyOptions& options);
CheckResult CheckIncentiveCompatibility(const VerifyOptions& options);
CheckResult CheckIndividualRationality(const VerifyOptions& options);
CheckResult CheckAccountingIdentity(const VerifyOptions& options);

std::vector<CheckResult> RunVerification(const VerifyOptions& options);

// Relative misreports applied to a true bid: -90% ... +90%.
const std::vector<double>& MisreportGrid();

}  // namespace spectrum

#endif  // SPECTRUM_VERIFICATION_HPP_
