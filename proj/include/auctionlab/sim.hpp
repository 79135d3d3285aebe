// Copyright 2026 The auction-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUCTIONLAB_SIM_HPP_
#define AUCTIONLAB_SIM_HPP_

#include <cstdint>
#include <vector>

#include "auctionlab/equilibrium.hpp"
#include "auctionlab/random.hpp"

namespace auctionlab {

enum class Winner { kAlice, kBob, kUnsold };

inline const char* winner_name(Winner w) {
  switch (w) {
    case Winner::kAlice: return "alice";
    case Winner::kBob: return "bob";
    default: return "unsold";
  }
}

// Full settlement record of one first-price auction path. "Alice" is the
// uninformed period-1 side (possibly several symmetric bidders collapsed to
// their maximum bid), "Bob" is the informed late bidder.
struct AuctionOutcome {
  double v = 0.0;          // realized common value
  double alice_bid = 0.0;  // highest period-1 bid
  double bob_bid = 0.0;    // informed bid as submitted (0 = abstention when alpha > 0)
  bool bob_present = true; // informed side active this path
  Winner winner = Winner::kUnsold;
  double price_paid = 0.0; // winner's own bid, 0 when unsold
  double alice_payoff = 0.0;
  double bob_payoff = 0.0;
  double revenue = 0.0;    // seller's take = price_paid
};

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

struct SimReport {
  long long n_paths = 0;
  std::uint64_t seed = 0;
  MeanSe alice_payoff;
  MeanSe bob_payoff;
  MeanSe revenue;
  MeanSe total_surplus;  // alice + bob + revenue per path
  double win_alice = 0.0;
  double win_bob = 0.0;
  double win_unsold = 0.0;
};

// One audit grid row: a fixed uninformed bid (point = the bid) or an
// informed bid shift (point = the shift), its Monte Carlo payoff, and the
// z-score against the model reference.
struct AuditRow {
  double point = 0.0;
  double mean = 0.0;
  double se = 0.0;
  double z = 0.0;
};

struct WinCurveBin {
  double v_center = 0.0;   // quantile((k+0.5)/n_bins)
  double expected = 0.0;   // model win probability for the bin, (k+0.5)/n_bins
  double observed = 0.0;   // informed-side win share among the bin's paths
  long long count = 0;
};

// Settles one auction from the realized value and the submitted bids.
// Reserve rules (alpha = 0): the informed bid must reach L, the uninformed
// bid must strictly exceed L; among the able, the higher bid wins with ties
// to the informed side; nobody able -> unsold. When alpha > 0 (reserve-free
// timing-uncertainty game) a zero informed bid means abstention and the
// uninformed bid wins outright, even at zero.
AuctionOutcome resolve_bids(const AuctionSpec& spec, double v,
                            double alice_bid, double bob_bid);

// Equilibrium settlement for given value draws: every period-1 value is
// mapped through the equilibrium bid, the informed side bids at v.
AuctionOutcome resolve_auction(const AuctionSpec& spec,
                               const ThresholdResult& th, double v,
                               const std::vector<double>& period1_values);

// Draws one path from the stream (the value first, then one uniform per
// period-1 bidder) and settles it at equilibrium.
AuctionOutcome run_auction(const AuctionSpec& spec, const ThresholdResult& th,
                           RandomStream& s);

// Monte Carlo summary over n_paths independent paths; path i uses
// RandomStream(seed, i), so the result is byte-identical for any thread
// count (threads are assigned fixed 4096-path blocks whose partial sums are
// combined in block order). Throws DomainError for n_paths < 1000.
SimReport estimate(const AuctionSpec& spec, long long n_paths,
                   std::uint64_t seed);

// Fixed uninformed bids against the equilibrium informed bidder, common
// random numbers across rows. Reference for z: alpha·mean(d) when alpha > 0
// (the uninformed side's equilibrium payoff), else 0.
std::vector<AuditRow> audit_alice(const AuctionSpec& spec,
                                  const std::vector<double>& bids,
                                  long long n_paths, std::uint64_t seed);

// Additive shifts of the informed bid (clamped at 0) against the equilibrium
// uninformed side, common random numbers across rows. Reference for z is the
// shift-0 row, which must be present.
std::vector<AuditRow> audit_bob(const AuctionSpec& spec,
                                const std::vector<double>& shifts,
                                long long n_paths, std::uint64_t seed);

// Informed-side win share in n_bins equal-probability value bins, next to
// the model curve P(win | v) = F(v) (whose bin average is (k+0.5)/n_bins
// exactly). Requires the reserve-free alpha = 0 configuration.
std::vector<WinCurveBin> empirical_win_curve(const AuctionSpec& spec,
                                             long long n_paths, int n_bins,
                                             std::uint64_t seed);

// Worker count for the block scheduler: the AUCTION_LAB_THREADS environment
// variable; unset, 0, or unparsable falls back to the hardware concurrency.
int resolve_thread_count();

}  // namespace auctionlab

#endif  // AUCTIONLAB_SIM_HPP_
