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

#ifndef AUCTIONLAB_PRICING_HPP_
#define AUCTIONLAB_PRICING_HPP_

#include "auctionlab/distribution.hpp"

namespace auctionlab {

// Zero-drift geometric Brownian motion: spot p0, volatility sigma, and the
// informed bidder's latency horizon T. The terminal value is lognormal with
// mean p0.
struct GbmParams {
  double p0 = 1.0;
  double sigma = 1.0;
  double horizon_T = 1.0;

  void validate() const;  // all three strictly positive
};

// Decomposition of the informed bidder's expected profit under a reserve:
// an exchange-option leg on the censored value draws, the collection over
// the reserve band, and a short binary leg; total = exchange + range - binary.
struct ProfitBreakdown {
  double exchange_term = 0.0;
  double range_term = 0.0;
  double binary_term = 0.0;
  double total = 0.0;
};

struct DominanceTriple {
  double exchange = 0.0;
  double atm_call = 0.0;
  double atm_put = 0.0;
};

// E[max(v1 - v2, 0)] for i.i.d. lognormal draws: p0·(2·Phi(sigma·sqrt(T/2)) - 1).
// This prices the informed bidder's profit when there is no reserve.
double margrabe_exchange(const GbmParams& g);

// d/dT of margrabe_exchange: p0·sigma/sqrt(2T)·phi(sigma·sqrt(T/2)). Positive
// for every T.
double theta_L0(const GbmParams& g);

// Zero-rate Black-Scholes call on the terminal value; strike 0 returns p0.
double bs_call(const GbmParams& g, double strike);

// d/dT of bs_call: p0·sigma/(2·sqrt(T))·phi(ln(p0/strike)/(sigma·sqrt(T)) +
// sigma·sqrt(T)/2). The uncontested (monopolist) bidder's timing sensitivity.
double monopolist_theta(const GbmParams& g, double strike);

// Closed-form profit of the informed bidder under reserve L on the GBM value:
// four Phi/quadrature terms that collapse to margrabe_exchange as L -> 0.
// Throws DegenerateRegime when L >= p0.
double profit_last_mover_gbm(const GbmParams& g, double L);

// Normative theta: Richardson-extrapolated central difference of
// profit_last_mover_gbm in T, step h = max(1e-4·T, 1e-7).
double theta_last_mover_fd(const GbmParams& g, double L);

// Literal evaluation of the six-term closed-form theta (two quadratures).
// Diagnostic companion to theta_last_mover_fd; requires L > 0.
double theta_last_mover_closed(const GbmParams& g, double L);

// Profit under reserve L for a generic value distribution, via the
// exchange/range/binary decomposition (1-D adaptive quadrature plus the
// distribution's closed-form lower-tail moments). Throws DegenerateRegime
// when L >= mean(d).
ProfitBreakdown profit_last_mover_generic(const ValueDistribution& d, double L);

// The reserve-free profit E[max(v1-v2,0)] next to at-the-money call and put
// values (strike = mean); the exchange leg dominates both.
DominanceTriple exchange_dominance_check(const ValueDistribution& d);

// Seller's expected revenue E[max(beta(v1), beta(v2))] under the equilibrium
// bid map. Degenerate regime (L >= mean) uses the degenerate strategies and
// returns L·P(v > L). Counts the lone-uninformed-bid-at-L event as a sale
// (the simulator's sold-only revenue differs by L·F(L)·(F(v_bar) - F(L))).
double revenue_expected(const ValueDistribution& d, double L);

// The uninformed bidder's equilibrium payoff when the informed bidder is
// absent with probability alpha: alpha·mean(d).
double alice_profit_uncertain(const ValueDistribution& d, double alpha);

}  // namespace auctionlab

#endif  // AUCTIONLAB_PRICING_HPP_
