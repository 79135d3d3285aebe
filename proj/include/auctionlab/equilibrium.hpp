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

#ifndef AUCTIONLAB_EQUILIBRIUM_HPP_
#define AUCTIONLAB_EQUILIBRIUM_HPP_

#include "auctionlab/distribution.hpp"
#include "auctionlab/random.hpp"

namespace auctionlab {

// One auction configuration: the common-value distribution, the reserve
// (limit) price L, the probability alpha that the informed late bidder never
// gets to act, and the number of uninformed period-1 bidders.
struct AuctionSpec {
  ValueDistribution dist;
  double limit_L = 0.0;
  double alpha = 0.0;
  int n_period1 = 1;

  // Throws DomainError on: limit_L < 0, alpha outside [0,1), alpha > 0 with a
  // nonzero reserve, or alpha > 0 with more than one period-1 bidder (the
  // timing-uncertainty model is defined for the reserve-free two-player game).
  void validate() const;
};

// Output of the threshold solvers. interior=false marks the degenerate
// regime (target not attainable below the mean); v_bar is +inf there.
struct ThresholdResult {
  double v_bar = 0.0;
  double residual = 0.0;  // |target - achieved| at v_bar
  bool interior = true;
};

// Solves E[v | v < v_bar] = L. L at or below the support infimum returns the
// infimum with interior=true (empty constraint); L >= mean(d) has no interior
// solution. Bisection on the monotone map, 1e-12 relative stopping, 200
// iteration cap (ConvergenceError beyond).
ThresholdResult solve_threshold(const ValueDistribution& d, double L);

// Solves E[v·1{v < v_bar}] = alpha·mean(d) for the timing-uncertainty game;
// alpha = 0 returns the support infimum.
ThresholdResult solve_threshold_alpha(const ValueDistribution& d, double alpha);

// Dispatches to the alpha solver when spec.alpha > 0, else the baseline one.
ThresholdResult solve_for(const AuctionSpec& spec);

// The informed bidder's equilibrium bid at observed value v (alpha = 0):
//   E[v'|v'<v]  for v >= v_bar,
//   L           for L < v < v_bar,
//   0           for v <= L.
// In the degenerate regime: L for v > L, else 0. Nondecreasing, never above v.
double bob_bid(const AuctionSpec& spec, const ThresholdResult& th, double v);

// Timing-uncertainty variant: 0 at or below v_bar_alpha, otherwise
// E[v'|v'<v] - alpha·mean/F(v). Continuous at the threshold and pointwise
// at or below the alpha=0 bid.
double bob_bid_alpha(const ValueDistribution& d, double alpha,
                     const ThresholdResult& th, double v);

// Equilibrium bid for a period-1 value draw under whichever model the
// AuctionSpec selects (baseline, reserve, degenerate, or alpha).
double equilibrium_bid(const AuctionSpec& spec, const ThresholdResult& th, double v);

// The uninformed bidder's mixed strategy: draw v' ~ F and bid the informed
// bid function at v'. Requires spec.alpha = 0.
double alice_bid_sample(const AuctionSpec& spec, const ThresholdResult& th,
                        RandomStream& s);

// inf{v : bob_bid(v) >= b}. Guarantees bob_bid(result) >= b; on the
// continuous branch b = truncated_mean(result) to ~1e-9. Throws DomainError
// for b above the mean (unattainable). b = mean on an unbounded support
// returns +inf.
double bid_pseudo_inverse(const AuctionSpec& spec, const ThresholdResult& th,
                          double b);

// One period-1 bidder's bid when spec.n_period1 = m >= 1 bidders split the
// uninformed side symmetrically: the value draw has CDF F^(1/m) (realized as
// quantile(u^m)), so the maximum of the m bids reproduces the single-bidder
// mixed-strategy law exactly. Requires spec.alpha = 0.
double period1_bid_sample_multi(const AuctionSpec& spec, const ThresholdResult& th,
                                RandomStream& s);

}  // namespace auctionlab

#endif  // AUCTIONLAB_EQUILIBRIUM_HPP_
