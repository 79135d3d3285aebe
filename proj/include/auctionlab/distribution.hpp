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

#ifndef AUCTIONLAB_DISTRIBUTION_HPP_
#define AUCTIONLAB_DISTRIBUTION_HPP_

#include <string>

#include "auctionlab/random.hpp"

namespace auctionlab {

enum class DistKind { kLognormal, kUniform, kExponential };

// Positive-support value distribution with the handful of primitives the
// equilibrium and pricing layers need: CDF, density, quantile, and the
// lower-tail moments E[v·1{v<x}] / E[v|v<x]. Immutable after construction
// and safe to share across threads.
class ValueDistribution {
 public:
  // Lognormal with E[v] = p0 for every horizon: v = p0·exp(-s²/2 + s·Z),
  // s = sigma·sqrt(horizon_T). This is the time-T value of a zero-drift
  // geometric Brownian motion started at p0.
  static ValueDistribution lognormal(double p0, double sigma, double horizon_T);
  static ValueDistribution uniform(double a, double b);
  static ValueDistribution exponential(double rate);

  DistKind kind() const { return kind_; }
  double mean() const { return mean_; }
  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }  // +inf when unbounded

  // Finite upper cutoff U with E[(v-U)+] negligible (< ~1e-16·mean); callers
  // truncate semi-infinite integrals here.
  double tail_cutoff() const;

  double cdf(double x) const;
  double pdf(double x) const;

  // Inverse CDF; u in [0,1], edges map to the support endpoints.
  double quantile(double u) const;

  // E[v·1{v<x}]; 0 at or below the support infimum, mean() at +inf.
  double partial_expectation(double x) const;

  // E[v | v<x]; throws DomainError when cdf(x) = 0.
  double truncated_mean(double x) const;

  // One inverse-CDF draw from the stream.
  double sample(RandomStream& s) const;

 private:
  ValueDistribution(DistKind kind, double q0, double q1, double q2);

  DistKind kind_;
  // Parameter slots by kind: lognormal (p0, sigma, T) — with mu_/s_ cached;
  // uniform (a, b, -); exponential (rate, -, -).
  double q0_, q1_, q2_;
  double mu_ = 0.0, s_ = 0.0;  // lognormal: log-mean and log-sd
  double mean_, lo_, hi_;
};

// Parses "kind:key=value,key=value" with kinds lognormal|uniform|exponential.
// Keys: lognormal p0,sigma,T; uniform a,b; exponential rate. Throws ParseError
// for malformed text and DomainError for out-of-range parameters.
ValueDistribution make_distribution(const std::string& spec);

}  // namespace auctionlab

#endif  // AUCTIONLAB_DISTRIBUTION_HPP_
