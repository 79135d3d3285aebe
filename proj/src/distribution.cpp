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

#include "auctionlab/distribution.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "auctionlab/errors.hpp"
#include "auctionlab/normal.hpp"

namespace auctionlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ValueDistribution::ValueDistribution(DistKind kind, double q0, double q1, double q2)
    : kind_(kind), q0_(q0), q1_(q1), q2_(q2) {
  switch (kind_) {
    case DistKind::kLognormal:
      s_ = q1_ * std::sqrt(q2_);
      mu_ = std::log(q0_) - 0.5 * s_ * s_;
      mean_ = q0_;
      lo_ = 0.0;
      hi_ = kInf;
      break;
    case DistKind::kUniform:
      mean_ = 0.5 * (q0_ + q1_);
      lo_ = q0_;
      hi_ = q1_;
      break;
    case DistKind::kExponential:
      mean_ = 1.0 / q0_;
      lo_ = 0.0;
      hi_ = kInf;
      break;
  }
}

ValueDistribution ValueDistribution::lognormal(double p0, double sigma,
                                               double horizon_T) {
  if (!(p0 > 0.0)) throw DomainError("lognormal: p0 must be > 0");
  if (!(sigma > 0.0)) throw DomainError("lognormal: sigma must be > 0");
  if (!(horizon_T > 0.0)) throw DomainError("lognormal: T must be > 0");
  return ValueDistribution(DistKind::kLognormal, p0, sigma, horizon_T);
}

ValueDistribution ValueDistribution::uniform(double a, double b) {
  if (!(a >= 0.0)) throw DomainError("uniform: a must be >= 0");
  if (!(b > a)) throw DomainError("uniform: b must be > a");
  return ValueDistribution(DistKind::kUniform, a, b, 0.0);
}

ValueDistribution ValueDistribution::exponential(double rate) {
  if (!(rate > 0.0)) throw DomainError("exponential: rate must be > 0");
  return ValueDistribution(DistKind::kExponential, rate, 0.0, 0.0);
}

double ValueDistribution::tail_cutoff() const {
  switch (kind_) {
    case DistKind::kLognormal:
      // E[(v-U)+] = p0·Phi(s - z) at U = exp(mu + z·s); z = 12 + s keeps the
      // asset-or-nothing tail below Phi(-12) ~ 2e-33.
      return std::exp(mu_ + s_ * (12.0 + s_));
    case DistKind::kUniform:
      return q1_;
    case DistKind::kExponential:
      // E[(v-U)+] = e^{-rate·U}/rate; U = 50/rate puts it near 2e-22·mean.
      return 50.0 / q0_;
  }
  return hi_;
}

double ValueDistribution::cdf(double x) const {
  switch (kind_) {
    case DistKind::kLognormal:
      if (x <= 0.0) return 0.0;
      return norm_cdf((std::log(x) - mu_) / s_);
    case DistKind::kUniform:
      if (x <= q0_) return 0.0;
      if (x >= q1_) return 1.0;
      return (x - q0_) / (q1_ - q0_);
    case DistKind::kExponential:
      if (x <= 0.0) return 0.0;
      return -std::expm1(-q0_ * x);
  }
  return 0.0;
}

double ValueDistribution::pdf(double x) const {
  switch (kind_) {
    case DistKind::kLognormal:
      if (x <= 0.0) return 0.0;
      return norm_pdf((std::log(x) - mu_) / s_) / (x * s_);
    case DistKind::kUniform:
      return (x >= q0_ && x <= q1_) ? 1.0 / (q1_ - q0_) : 0.0;
    case DistKind::kExponential:
      return x >= 0.0 ? q0_ * std::exp(-q0_ * x) : 0.0;
  }
  return 0.0;
}

double ValueDistribution::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("quantile: u must lie in [0,1]");
  if (u == 0.0) return lo_;
  if (u == 1.0) return hi_;
  switch (kind_) {
    case DistKind::kLognormal:
      return std::exp(mu_ + s_ * norm_quantile(u));
    case DistKind::kUniform:
      return q0_ + u * (q1_ - q0_);
    case DistKind::kExponential:
      return -std::log1p(-u) / q0_;
  }
  return 0.0;
}

double ValueDistribution::partial_expectation(double x) const {
  switch (kind_) {
    case DistKind::kLognormal:
      if (x <= 0.0) return 0.0;
      return q0_ * norm_cdf((std::log(x) - mu_) / s_ - s_);
    case DistKind::kUniform: {
      const double t = std::fmin(std::fmax(x, q0_), q1_);
      return 0.5 * (t * t - q0_ * q0_) / (q1_ - q0_);
    }
    case DistKind::kExponential: {
      if (x <= 0.0) return 0.0;
      if (x == kInf) return mean_;
      // E[v·1{v<x}] = (1 - (1 + rate·x)·e^{-rate·x}) / rate
      return (1.0 - (1.0 + q0_ * x) * std::exp(-q0_ * x)) / q0_;
    }
  }
  return 0.0;
}

double ValueDistribution::truncated_mean(double x) const {
  const double c = cdf(x);
  if (c <= 0.0) {
    throw DomainError("truncated_mean: cdf(x) = 0, conditioning on a null event");
  }
  return partial_expectation(x) / c;
}

double ValueDistribution::sample(RandomStream& s) const {
  return quantile(s.next_double());
}

namespace {

std::map<std::string, double> parse_kv(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw ParseError("make_distribution: expected key=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    std::size_t used = 0;
    double parsed = 0.0;
    try {
      parsed = std::stod(val, &used);
    } catch (const std::exception&) {
      throw ParseError("make_distribution: bad numeric value '" + val + "'");
    }
    if (used != val.size()) {
      throw ParseError("make_distribution: trailing junk in value '" + val + "'");
    }
    if (!out.emplace(key, parsed).second) {
      throw ParseError("make_distribution: duplicate key '" + key + "'");
    }
  }
  if (out.empty()) throw ParseError("make_distribution: no parameters given");
  return out;
}

double take(std::map<std::string, double>& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) {
    throw ParseError("make_distribution: missing parameter '" + key + "'");
  }
  const double v = it->second;
  kv.erase(it);
  return v;
}

}  // namespace

ValueDistribution make_distribution(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size()) {
    throw ParseError("make_distribution: expected 'kind:key=value,...', got '" +
                     spec + "'");
  }
  const std::string kind = spec.substr(0, colon);
  auto kv = parse_kv(spec.substr(colon + 1));

  if (kind == "lognormal") {
    const double p0 = take(kv, "p0");
    const double sigma = take(kv, "sigma");
    // Accept both the short and the spelled-out horizon key.
    const double t = kv.count("T") ? take(kv, "T") : take(kv, "horizon_T");
    if (!kv.empty()) {
      throw ParseError("make_distribution: unknown key '" + kv.begin()->first + "'");
    }
    return ValueDistribution::lognormal(p0, sigma, t);
  }
  if (kind == "uniform") {
    const double a = take(kv, "a");
    const double b = take(kv, "b");
    if (!kv.empty()) {
      throw ParseError("make_distribution: unknown key '" + kv.begin()->first + "'");
    }
    return ValueDistribution::uniform(a, b);
  }
  if (kind == "exponential") {
    const double rate = take(kv, "rate");
    if (!kv.empty()) {
      throw ParseError("make_distribution: unknown key '" + kv.begin()->first + "'");
    }
    return ValueDistribution::exponential(rate);
  }
  throw ParseError("make_distribution: unknown kind '" + kind + "'");
}

}  // namespace auctionlab
