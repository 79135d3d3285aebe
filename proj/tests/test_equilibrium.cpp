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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "auctionlab/distribution.hpp"
#include "auctionlab/equilibrium.hpp"
#include "auctionlab/errors.hpp"
#include "auctionlab/random.hpp"

using namespace auctionlab;

#define CHECK_NEAR(got, want, tol) CHECK(std::fabs((got) - (want)) <= (tol))

namespace {

AuctionSpec uniform_spec(double limit, double alpha = 0.0, int m = 1) {
  return AuctionSpec{ValueDistribution::uniform(0.0, 1.0), limit, alpha, m};
}

double ks_statistic(std::vector<double> xs,
                    const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double c = cdf(xs[i]);
    d = std::max(d, std::fabs((static_cast<double>(i) + 1.0) / n - c));
    d = std::max(d, std::fabs(static_cast<double>(i) / n - c));
  }
  return d;
}

}  // namespace

TEST_CASE("spec validation rejects out-of-domain parameters") {
  CHECK_NOTHROW(uniform_spec(0.25).validate());
  CHECK_NOTHROW(uniform_spec(0.0, 0.2).validate());
  CHECK_NOTHROW(uniform_spec(0.0, 0.0, 3).validate());
  CHECK_THROWS_AS(uniform_spec(-0.1).validate(), DomainError);
  CHECK_THROWS_AS(uniform_spec(0.0, 1.0).validate(), DomainError);
  CHECK_THROWS_AS(uniform_spec(0.0, -0.2).validate(), DomainError);
  CHECK_THROWS_AS(uniform_spec(0.1, 0.2).validate(), DomainError);
  CHECK_THROWS_AS(uniform_spec(0.0, 0.0, 0).validate(), DomainError);
  CHECK_THROWS_AS(uniform_spec(0.0, 0.2, 2).validate(), DomainError);
}

TEST_CASE("threshold solves the conditional-mean equation") {
  const ValueDistribution u = ValueDistribution::uniform(0.0, 1.0);
  const ThresholdResult tu = solve_threshold(u, 0.25);
  CHECK(tu.interior);
  CHECK_NEAR(tu.v_bar, 0.5, 1e-9);
  CHECK(tu.residual <= 1e-9);
  CHECK_NEAR(u.truncated_mean(tu.v_bar), 0.25, 1e-9);

  const ValueDistribution ln = ValueDistribution::lognormal(1.0, 1.0, 1.0);
  const ThresholdResult tl = solve_threshold(ln, 0.5);
  CHECK(tl.interior);
  CHECK_NEAR(tl.v_bar, 1.204754154239862, 1e-9);
  CHECK_NEAR(ln.truncated_mean(tl.v_bar), 0.5, 1e-10);

  const ValueDistribution ex = ValueDistribution::exponential(1.0);
  const ThresholdResult te = solve_threshold(ex, 0.5);
  CHECK(te.interior);
  CHECK_NEAR(ex.truncated_mean(te.v_bar), 0.5, 1e-10);
}

TEST_CASE("threshold edge regimes") {
  const ValueDistribution u = ValueDistribution::uniform(0.0, 1.0);
  const ThresholdResult zero = solve_threshold(u, 0.0);
  CHECK(zero.interior);
  CHECK(zero.v_bar == u.support_lo());

  CHECK_FALSE(solve_threshold(u, 0.5).interior);   // L = mean
  CHECK_FALSE(solve_threshold(u, 0.9).interior);   // L > mean
  CHECK(solve_threshold(u, 0.49).interior);
  CHECK_THROWS_AS(solve_threshold(u, -1.0), DomainError);

  // Bounded-below support: any L at or below the lower endpoint is inert.
  const ValueDistribution shifted = ValueDistribution::uniform(0.25, 0.75);
  CHECK(solve_threshold(shifted, 0.1).v_bar == 0.25);
}

TEST_CASE("absence-probability threshold solves the guarantee equation") {
  const ValueDistribution u = ValueDistribution::uniform(0.0, 1.0);
  const ThresholdResult ta = solve_threshold_alpha(u, 0.2);
  CHECK(ta.interior);
  CHECK_NEAR(ta.v_bar, 0.447213595499958, 1e-9);  // sqrt(0.2)
  CHECK(ta.residual <= 1e-10);
  CHECK_NEAR(u.partial_expectation(ta.v_bar), 0.2 * u.mean(), 1e-10);

  const ValueDistribution ex = ValueDistribution::exponential(1.0);
  const ThresholdResult te = solve_threshold_alpha(ex, 0.5);
  CHECK_NEAR(te.v_bar, 1.678346990016661, 1e-9);
  CHECK_NEAR(ex.partial_expectation(te.v_bar), 0.5, 1e-10);

  CHECK(solve_threshold_alpha(u, 0.0).v_bar == u.support_lo());
  CHECK_THROWS_AS(solve_threshold_alpha(u, 1.0), DomainError);

  // solve_for dispatches on alpha.
  CHECK_NEAR(solve_for(uniform_spec(0.0, 0.2)).v_bar, 0.447213595499958, 1e-9);
  CHECK_NEAR(solve_for(uniform_spec(0.25)).v_bar, 0.5, 1e-9);
}

TEST_CASE("informed bid function: all branches") {
  const AuctionSpec spec = uniform_spec(0.25);
  const ThresholdResult th = solve_for(spec);

  CHECK(bob_bid(spec, th, 0.0) == 0.0);
  CHECK(bob_bid(spec, th, 0.1) == 0.0);
  CHECK(bob_bid(spec, th, 0.25) == 0.0);          // at the reserve: still out
  CHECK_NEAR(bob_bid(spec, th, 0.26), 0.25, 1e-12);  // reserve band
  CHECK_NEAR(bob_bid(spec, th, 0.4), 0.25, 1e-12);
  CHECK_NEAR(bob_bid(spec, th, 0.5), 0.25, 1e-9);    // E[v|v<0.5] = L
  CHECK_NEAR(bob_bid(spec, th, 0.8), 0.4, 1e-9);     // conditional mean
  CHECK_NEAR(bob_bid(spec, th, 1.0), 0.5, 1e-9);

  // Monotone and continuous across the threshold.
  double prev = -1.0;
  for (int k = 0; k <= 200; ++k) {
    const double bid = bob_bid(spec, th, k / 200.0);
    CHECK(bid >= prev - 1e-12);
    prev = bid;
  }
  CHECK_NEAR(bob_bid(spec, th, th.v_bar - 1e-7), bob_bid(spec, th, th.v_bar + 1e-7),
             1e-6);

  // Zero reserve: the bid is the conditional mean everywhere, v/2 here.
  const AuctionSpec zero = uniform_spec(0.0);
  const ThresholdResult th0 = solve_for(zero);
  CHECK_NEAR(bob_bid(zero, th0, 0.2), 0.1, 1e-12);
  CHECK_NEAR(bob_bid(zero, th0, 0.5), 0.25, 1e-12);
  CHECK_NEAR(bob_bid(zero, th0, 1.0), 0.5, 1e-12);

  CHECK_THROWS_AS(bob_bid(uniform_spec(0.0, 0.2), th0, 0.5), DomainError);
  CHECK_THROWS_AS(bob_bid(spec, th, -0.5), DomainError);
}

TEST_CASE("absence probability shades the informed bid downward") {
  const ValueDistribution u = ValueDistribution::uniform(0.0, 1.0);
  const double alpha = 0.2;
  const ThresholdResult ta = solve_threshold_alpha(u, alpha);

  CHECK(bob_bid_alpha(u, alpha, ta, 0.1) == 0.0);   // below threshold: abstain
  CHECK(bob_bid_alpha(u, alpha, ta, 0.44) == 0.0);
  CHECK_NEAR(bob_bid_alpha(u, alpha, ta, 1.0), 0.4, 1e-12);  // v/2 - 0.1/F(v)

  // Continuity at the threshold: the shaded bid starts at zero.
  CHECK_NEAR(bob_bid_alpha(u, alpha, ta, ta.v_bar + 1e-8), 0.0, 1e-6);

  // Pointwise below the always-present bid, and nondecreasing.
  const AuctionSpec base = uniform_spec(0.0);
  const ThresholdResult th0 = solve_for(base);
  double prev = -1.0;
  for (int k = 0; k <= 1000; ++k) {
    const double v = k / 1000.0;
    const double shaded = bob_bid_alpha(u, alpha, ta, v);
    CHECK(shaded <= bob_bid(base, th0, v) + 1e-12);
    CHECK(shaded >= prev - 1e-12);
    prev = shaded;
  }

  // equilibrium_bid dispatches on alpha.
  const AuctionSpec aspec = uniform_spec(0.0, alpha);
  CHECK(equilibrium_bid(aspec, ta, 1.0) ==
        bob_bid_alpha(u, alpha, ta, 1.0));
  CHECK(equilibrium_bid(base, th0, 0.7) == bob_bid(base, th0, 0.7));
}

TEST_CASE("the period-1 mixed bid has atoms at zero and at the reserve") {
  const AuctionSpec spec = uniform_spec(0.25);
  const ThresholdResult th = solve_for(spec);
  RandomStream s(5, 0);
  const int n = 20000;
  int at_zero = 0, at_reserve = 0;
  for (int i = 0; i < n; ++i) {
    const double b = alice_bid_sample(spec, th, s);
    CHECK(b >= 0.0);
    CHECK(b <= 0.5 + 1e-12);
    if (b == 0.0) ++at_zero;
    else if (b == 0.25) ++at_reserve;
    else CHECK(b > 0.25 - 1e-9);
  }
  // Both atoms carry probability F(L) = F(v_bar) - F(L) = 0.25.
  const double band = 3.5 * std::sqrt(0.25 * 0.75 / n);
  CHECK_NEAR(at_zero / static_cast<double>(n), 0.25, band);
  CHECK_NEAR(at_reserve / static_cast<double>(n), 0.25, band);

  CHECK_THROWS_AS(alice_bid_sample(uniform_spec(0.0, 0.2), th, s), DomainError);
}

TEST_CASE("bid pseudo-inverse undoes the bid map") {
  const AuctionSpec zero = uniform_spec(0.0);
  const ThresholdResult th0 = solve_for(zero);
  CHECK_NEAR(bid_pseudo_inverse(zero, th0, 0.4), 0.8, 1e-9);
  for (double b : {0.05, 0.1, 0.22, 0.37, 0.5}) {
    const double v = bid_pseudo_inverse(zero, th0, b);
    CHECK_NEAR(v, 2.0 * b, 1e-8);
    CHECK(bob_bid(zero, th0, v) >= b - 1e-9);
  }
  CHECK(bid_pseudo_inverse(zero, th0, 0.0) == 0.0);
  CHECK_THROWS_AS(bid_pseudo_inverse(zero, th0, 0.6), DomainError);  // > mean

  const AuctionSpec spec = uniform_spec(0.25);
  const ThresholdResult th = solve_for(spec);
  CHECK_NEAR(bid_pseudo_inverse(spec, th, 0.2), 0.25, 1e-9);   // reserve band
  CHECK_NEAR(bid_pseudo_inverse(spec, th, 0.25), 0.25, 1e-9);
  CHECK_NEAR(bid_pseudo_inverse(spec, th, 0.3), 0.6, 1e-8);
  CHECK_NEAR(bid_pseudo_inverse(spec, th, 0.5), 1.0, 1e-8);

  // Unbounded support: a bid equal to the mean is only reached in the limit.
  const AuctionSpec exp_spec{ValueDistribution::exponential(1.0), 0.0, 0.0, 1};
  const ThresholdResult the = solve_for(exp_spec);
  CHECK(std::isinf(bid_pseudo_inverse(exp_spec, the, 1.0)));
}

TEST_CASE("splitting the period-1 side preserves the max-bid law") {
  const int n = 100000;
  const AuctionSpec one = uniform_spec(0.0);
  const ThresholdResult th = solve_for(one);

  // Single bidder: the mixed-bid law is G(b) = 2b on [0, 1/2].
  {
    RandomStream s(17, 0);
    std::vector<double> bids(n);
    for (double& b : bids) b = period1_bid_sample_multi(one, th, s);
    const double ks = ks_statistic(
        bids, [](double b) { return std::clamp(2.0 * b, 0.0, 1.0); });
    CHECK(ks < 0.01);
  }

  // Two bidders: each draws from the split law G^{1/2} = sqrt(2b) ...
  const AuctionSpec two = uniform_spec(0.0, 0.0, 2);
  {
    RandomStream s(17, 1);
    std::vector<double> bids(n);
    for (double& b : bids) b = period1_bid_sample_multi(two, th, s);
    const double ks = ks_statistic(bids, [](double b) {
      return std::sqrt(std::clamp(2.0 * b, 0.0, 1.0));
    });
    CHECK(ks < 0.01);
  }

  // ... so the maximum of the two recovers the single-bidder law G.
  {
    RandomStream s(17, 2);
    std::vector<double> maxima(n);
    for (double& b : maxima) {
      b = std::max(period1_bid_sample_multi(two, th, s),
                   period1_bid_sample_multi(two, th, s));
    }
    const double ks = ks_statistic(
        maxima, [](double b) { return std::clamp(2.0 * b, 0.0, 1.0); });
    CHECK(ks < 0.01);
  }

  RandomStream reject(1, 1);
  CHECK_THROWS_AS(period1_bid_sample_multi(uniform_spec(0.0, 0.2), th, reject),
                  DomainError);
}

TEST_CASE("no interior threshold: reserve-or-nothing bids") {
  const AuctionSpec spec = uniform_spec(0.6);
  const ThresholdResult th = solve_for(spec);
  CHECK_FALSE(th.interior);
  CHECK(bob_bid(spec, th, 0.5) == 0.0);
  CHECK(bob_bid(spec, th, 0.6) == 0.0);
  CHECK_NEAR(bob_bid(spec, th, 0.7), 0.6, 1e-12);
  CHECK_NEAR(bid_pseudo_inverse(spec, th, 0.3), 0.6, 1e-12);
}
