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

#include "auctionlab/equilibrium.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "auctionlab/errors.hpp"

namespace auctionlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRelTol = 1e-12;
constexpr int kMaxIter = 200;

// Bisection for a nondecreasing g with g < 0 left of the root. The initial
// bracket is [quantile(1e-12), min(support_hi, quantile(1-1e-12))]; when the
// root escapes it, the low end is halved (unbounded-below-in-probability
// targets such as a near-zero reserve) and the high end doubled (unbounded
// supports) until the sign flips, which keeps the final bracket within a
// factor 2 of the root. Stops at 1e-12 relative width.
double bisect_threshold(const ValueDistribution& d,
                        const std::function<double(double)>& g) {
  double lo = d.quantile(1e-12);
  double hi = std::isfinite(d.support_hi()) ? d.support_hi()
                                            : d.quantile(1.0 - 1e-12);

  if (g(lo) > 0.0) {
    double prev = lo;
    int k = 0;
    while (g(lo) > 0.0) {
      if (++k > 1100 || lo <= std::numeric_limits<double>::min()) {
        throw ConvergenceError("solve_threshold: could not bracket the root from below");
      }
      prev = lo;
      lo *= 0.5;
    }
    hi = prev;
  } else if (g(hi) < 0.0) {
    double prev = hi;
    int k = 0;
    while (g(hi) < 0.0) {
      if (++k > 300 || !std::isfinite(hi)) {
        throw ConvergenceError("solve_threshold: could not bracket the root from above");
      }
      prev = hi;
      hi *= 2.0;
    }
    lo = prev;
  }

  for (int it = 0; it < kMaxIter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= kRelTol * std::fmax(mid, std::numeric_limits<double>::min())) {
      return mid;
    }
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  throw ConvergenceError("solve_threshold: bisection did not converge in 200 iterations");
}

}  // namespace

void AuctionSpec::validate() const {
  if (!(limit_L >= 0.0)) throw DomainError("AuctionSpec: limit_L must be >= 0");
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw DomainError("AuctionSpec: alpha must lie in [0,1)");
  }
  if (alpha > 0.0 && limit_L != 0.0) {
    throw DomainError("AuctionSpec: a nonzero reserve is not supported when alpha > 0");
  }
  if (n_period1 < 1) throw DomainError("AuctionSpec: n_period1 must be >= 1");
  if (alpha > 0.0 && n_period1 != 1) {
    throw DomainError("AuctionSpec: multiple period-1 bidders require alpha = 0");
  }
}

ThresholdResult solve_threshold(const ValueDistribution& d, double L) {
  if (!(L >= 0.0)) throw DomainError("solve_threshold: L must be >= 0");
  if (L <= d.support_lo()) {
    // Empty constraint: every positive-probability conditioning event already
    // has conditional mean above L.
    return {d.support_lo(), 0.0, true};
  }
  if (L >= d.mean()) {
    return {kInf, 0.0, false};
  }
  // Root of E[v|v<x] = L, written as partial_expectation(x) - L·cdf(x) = 0 so
  // deep-tail evaluations stay well conditioned (no 0/0 ratios).
  const double v_bar = bisect_threshold(
      d, [&](double x) { return d.partial_expectation(x) - L * d.cdf(x); });
  const double c = d.cdf(v_bar);
  const double residual = c > 0.0 ? std::fabs(d.partial_expectation(v_bar) / c - L) : 0.0;
  return {v_bar, residual, true};
}

ThresholdResult solve_threshold_alpha(const ValueDistribution& d, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw DomainError("solve_threshold_alpha: alpha must lie in [0,1)");
  }
  if (alpha == 0.0) {
    return {d.support_lo(), 0.0, true};
  }
  const double target = alpha * d.mean();
  const double v_bar = bisect_threshold(
      d, [&](double x) { return d.partial_expectation(x) - target; });
  return {v_bar, std::fabs(d.partial_expectation(v_bar) - target), true};
}

ThresholdResult solve_for(const AuctionSpec& spec) {
  spec.validate();
  return spec.alpha > 0.0 ? solve_threshold_alpha(spec.dist, spec.alpha)
                          : solve_threshold(spec.dist, spec.limit_L);
}

double bob_bid(const AuctionSpec& spec, const ThresholdResult& th, double v) {
  if (spec.alpha != 0.0) throw DomainError("bob_bid: defined for alpha = 0 specs");
  if (!(v >= 0.0)) throw DomainError("bob_bid: v must be >= 0");
  const double L = spec.limit_L;
  if (!th.interior) {
    // Reserve at or above the mean: bidding above L can never profit, so the
    // informed bidder takes the good at the reserve whenever it has value.
    return v > L ? L : 0.0;
  }
  if (v <= L) return 0.0;
  if (v < th.v_bar) return L;
  if (spec.dist.cdf(v) <= 0.0) {
    // v sits exactly on the support infimum (possible only when v_bar does
    // too); the conditional mean's limit from above is the infimum itself,
    // which equals L here.
    return L;
  }
  return spec.dist.truncated_mean(v);
}

double bob_bid_alpha(const ValueDistribution& d, double alpha,
                     const ThresholdResult& th, double v) {
  if (!(v >= 0.0)) throw DomainError("bob_bid_alpha: v must be >= 0");
  if (v <= th.v_bar || d.cdf(v) <= 0.0) return 0.0;
  const double bid = d.truncated_mean(v) - alpha * d.mean() / d.cdf(v);
  return std::fmax(bid, 0.0);
}

double equilibrium_bid(const AuctionSpec& spec, const ThresholdResult& th, double v) {
  return spec.alpha > 0.0 ? bob_bid_alpha(spec.dist, spec.alpha, th, v)
                          : bob_bid(spec, th, v);
}

double alice_bid_sample(const AuctionSpec& spec, const ThresholdResult& th,
                        RandomStream& s) {
  if (spec.alpha != 0.0) {
    throw DomainError("alice_bid_sample: defined for alpha = 0 specs");
  }
  return bob_bid(spec, th, spec.dist.sample(s));
}

double bid_pseudo_inverse(const AuctionSpec& spec, const ThresholdResult& th,
                          double b) {
  if (!(b >= 0.0)) throw DomainError("bid_pseudo_inverse: b must be >= 0");
  const ValueDistribution& d = spec.dist;
  if (b > d.mean()) {
    throw DomainError("bid_pseudo_inverse: no value attains a bid above the mean");
  }
  if (b <= 0.0) return d.support_lo();
  const double L = spec.limit_L;
  if (!th.interior) return L;  // degenerate bid map: {0, L}, and b <= mean <= L
  if (b <= L) return L;        // the reserve band starts immediately above L
  if (b >= d.mean() && !std::isfinite(d.support_hi())) {
    // The conditional mean approaches the unconditional mean only in the
    // limit, so a bid equal to the mean has no finite preimage.
    return kInf;
  }

  // Continuous branch: invert the nondecreasing conditional mean on
  // [v_bar, ...). The high end doubles past quantile(1-1e-12) if needed; on
  // an unbounded support b = mean is attained only in the limit.
  double lo = th.v_bar;
  double hi = std::isfinite(d.support_hi()) ? d.support_hi()
                                            : d.quantile(1.0 - 1e-12);
  const auto above = [&](double x) { return d.truncated_mean(x) >= b; };
  if (!above(hi)) {
    for (int k = 0; k < 300; ++k) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) return kInf;
      if (above(hi)) break;
    }
    if (!above(hi)) return kInf;
  }
  for (int it = 0; it < kMaxIter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= kRelTol * std::fmax(mid, 1e-300)) break;
    (above(mid) ? hi : lo) = mid;
  }
  return hi;  // the >= end of the bracket, so bob_bid(result) >= b holds
}

double period1_bid_sample_multi(const AuctionSpec& spec, const ThresholdResult& th,
                                RandomStream& s) {
  if (spec.alpha != 0.0) {
    throw DomainError("period1_bid_sample_multi: defined for alpha = 0 specs");
  }
  const double u = s.next_double();
  // m bidders: each value draw has CDF F^(1/m), i.e. quantile(u^m). m = 1
  // bypasses pow so the draw is bit-identical to alice_bid_sample.
  const double v = spec.n_period1 == 1
                       ? spec.dist.quantile(u)
                       : spec.dist.quantile(std::pow(u, spec.n_period1));
  return bob_bid(spec, th, v);
}

}  // namespace auctionlab
