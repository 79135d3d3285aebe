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
#include "auctionlab/errors.hpp"
#include "auctionlab/normal.hpp"
#include "auctionlab/random.hpp"

using namespace auctionlab;

#define CHECK_NEAR(got, want, tol) CHECK(std::fabs((got) - (want)) <= (tol))

namespace {

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

TEST_CASE("normal cdf, pdf, and quantile: frozen values and round trips") {
  CHECK_NEAR(norm_cdf(0.0), 0.5, 1e-15);
  CHECK_NEAR(norm_cdf(1.0), 0.841344746068543, 1e-12);
  CHECK_NEAR(norm_cdf(-1.0), 0.158655253931457, 1e-12);
  CHECK_NEAR(norm_cdf(2.0), 0.977249868051821, 1e-12);
  CHECK_NEAR(norm_pdf(0.0), 0.398942280401433, 1e-12);
  CHECK_NEAR(norm_pdf(1.0), 0.241970724519143, 1e-12);
  CHECK_NEAR(norm_quantile(0.975), 1.959963984540054, 1e-10);
  CHECK_NEAR(norm_quantile(0.5), 0.0, 1e-15);

  // Deep-tail behaviour: symmetric, monotone, and accurate under composition.
  CHECK_NEAR(norm_cdf(1.0) + norm_cdf(-1.0), 1.0, 1e-15);
  for (double p : {1e-10, 1e-6, 1e-3, 0.05, 0.3, 0.5, 0.77, 0.999, 1 - 1e-9}) {
    const double round = norm_cdf(norm_quantile(p));
    CHECK_NEAR(round, p, 1e-13 * std::max(p, 1e-3));
  }
}

TEST_CASE("lognormal: mean-preserving parameterization and closed forms") {
  const ValueDistribution d = ValueDistribution::lognormal(1.0, 1.0, 1.0);
  CHECK_NEAR(d.mean(), 1.0, 1e-12);
  CHECK(d.support_lo() == 0.0);
  CHECK(std::isinf(d.support_hi()));
  CHECK_NEAR(d.cdf(1.0), 0.691462461274013, 1e-12);
  CHECK_NEAR(d.quantile(0.5), 0.606530659712633, 1e-12);  // exp(-s^2/2)
  CHECK_NEAR(d.pdf(1.0), 0.352065326764300, 1e-12);
  CHECK_NEAR(d.partial_expectation(1.0), 0.308537538725987, 1e-12);
  CHECK_NEAR(d.truncated_mean(1.0), 0.446210106847318, 1e-12);

  // The mean stays at p0 regardless of volatility or horizon.
  CHECK_NEAR(ValueDistribution::lognormal(2.0, 0.3, 2.0).mean(), 2.0, 1e-12);
  const ValueDistribution wide = ValueDistribution::lognormal(2.0, 0.5, 4.0);
  CHECK_NEAR(wide.cdf(2.0 * std::exp(-0.5)), 0.5, 1e-12);  // median = p0 e^{-s^2/2}
}

TEST_CASE("uniform: closed forms") {
  const ValueDistribution d = ValueDistribution::uniform(0.25, 0.75);
  CHECK_NEAR(d.mean(), 0.5, 1e-15);
  CHECK(d.support_lo() == 0.25);
  CHECK(d.support_hi() == 0.75);
  CHECK_NEAR(d.cdf(0.5), 0.5, 1e-15);
  CHECK(d.cdf(0.1) == 0.0);
  CHECK(d.cdf(0.9) == 1.0);
  CHECK_NEAR(d.pdf(0.5), 2.0, 1e-15);
  CHECK(d.pdf(0.1) == 0.0);
  CHECK_NEAR(d.quantile(0.3), 0.4, 1e-15);
  CHECK_NEAR(d.partial_expectation(0.5), 0.1875, 1e-15);
  CHECK_NEAR(d.truncated_mean(0.5), 0.375, 1e-15);
  CHECK_NEAR(ValueDistribution::uniform(0.0, 1.0).truncated_mean(0.5), 0.25,
             1e-15);
}

TEST_CASE("exponential: closed forms") {
  const ValueDistribution d = ValueDistribution::exponential(1.0);
  CHECK_NEAR(d.mean(), 1.0, 1e-15);
  CHECK(d.support_lo() == 0.0);
  CHECK(std::isinf(d.support_hi()));
  CHECK_NEAR(d.cdf(1.0), 0.632120558828558, 1e-12);
  CHECK_NEAR(d.pdf(1.0), 0.367879441171442, 1e-12);
  CHECK_NEAR(d.partial_expectation(1.0), 0.264241117657115, 1e-12);
  CHECK_NEAR(d.quantile(1.0 - std::exp(-1.0)), 1.0, 1e-12);
  CHECK_NEAR(ValueDistribution::exponential(2.0).mean(), 0.5, 1e-15);
}

TEST_CASE("quantile and cdf are inverse maps on every kind") {
  const std::vector<ValueDistribution> kinds = {
      ValueDistribution::lognormal(1.0, 1.0, 1.0),
      ValueDistribution::lognormal(2.0, 0.4, 0.5),
      ValueDistribution::uniform(0.2, 1.7),
      ValueDistribution::exponential(2.0),
  };
  for (const ValueDistribution& d : kinds) {
    for (double u : {1e-9, 1e-4, 0.02, 0.31, 0.5, 0.66, 0.93, 0.9999}) {
      const double x = d.quantile(u);
      CHECK_NEAR(d.cdf(x), u, 1e-11);
      CHECK_NEAR(d.quantile(d.cdf(x)), x, 1e-9 * std::max(1.0, std::fabs(x)));
    }
    CHECK(d.quantile(0.0) == d.support_lo());
    CHECK(d.quantile(1.0) == d.support_hi());
  }
}

TEST_CASE("pdf is the derivative of the cdf") {
  const std::vector<ValueDistribution> kinds = {
      ValueDistribution::lognormal(1.0, 1.0, 1.0),
      ValueDistribution::uniform(0.0, 1.0),
      ValueDistribution::exponential(2.0),
  };
  for (const ValueDistribution& d : kinds) {
    for (double u : {0.1, 0.35, 0.5, 0.75, 0.9}) {
      const double x = d.quantile(u);
      const double h = 1e-6 * std::max(1.0, std::fabs(x));
      const double slope = (d.cdf(x + h) - d.cdf(x - h)) / (2.0 * h);
      CHECK_NEAR(d.pdf(x), slope, 1e-5 * std::max(1.0, d.pdf(x)));
    }
  }
}

TEST_CASE("partial expectation saturates at the mean and vanishes below") {
  const std::vector<ValueDistribution> kinds = {
      ValueDistribution::lognormal(1.0, 1.0, 1.0),
      ValueDistribution::uniform(0.25, 0.75),
      ValueDistribution::exponential(1.0),
  };
  for (const ValueDistribution& d : kinds) {
    CHECK(d.partial_expectation(d.support_lo()) == 0.0);
    const double cut = d.tail_cutoff();
    CHECK(std::isfinite(cut));
    CHECK(d.cdf(cut) >= 1.0 - 1e-12);
    CHECK_NEAR(d.partial_expectation(cut), d.mean(), 1e-10 * d.mean());
    // Monotone in the cutoff.
    CHECK(d.partial_expectation(d.quantile(0.6)) >
          d.partial_expectation(d.quantile(0.4)));
  }
}

TEST_CASE("truncated mean rejects points with no mass below them") {
  CHECK_THROWS_AS(ValueDistribution::uniform(0.25, 0.75).truncated_mean(0.2),
                  DomainError);
  CHECK_THROWS_AS(ValueDistribution::exponential(1.0).truncated_mean(0.0),
                  DomainError);
  CHECK_THROWS_AS(ValueDistribution::lognormal(1.0, 1.0, 1.0).truncated_mean(0.0),
                  DomainError);
  // Far above the support the truncated mean is the mean itself.
  CHECK_NEAR(ValueDistribution::uniform(0.0, 1.0).truncated_mean(10.0), 0.5,
             1e-15);
}

TEST_CASE("inverse-cdf sampling matches the distribution (KS)") {
  const int n = 20000;
  const std::vector<ValueDistribution> kinds = {
      ValueDistribution::lognormal(1.0, 1.0, 1.0),
      ValueDistribution::uniform(0.0, 1.0),
      ValueDistribution::exponential(2.0),
  };
  std::uint64_t stream_idx = 0;
  for (const ValueDistribution& d : kinds) {
    RandomStream s(91, stream_idx++);
    std::vector<double> xs(n);
    for (double& x : xs) {
      x = d.sample(s);
      CHECK(x > d.support_lo());
      CHECK(x < d.support_hi());
    }
    const double ks = ks_statistic(xs, [&d](double x) { return d.cdf(x); });
    CHECK(ks < 0.015);  // 1.36/sqrt(n) = 0.0096 at the 5% level
  }
}

TEST_CASE("random streams are reproducible and distinct") {
  RandomStream a(7, 3), b(7, 3), c(7, 4);
  bool all_equal = true;
  bool any_diff_stream = false;
  for (int i = 0; i < 100; ++i) {
    const double ua = a.next_double();
    all_equal = all_equal && (ua == b.next_double());
    any_diff_stream = any_diff_stream || (ua != c.next_double());
    CHECK(ua > 0.0);
    CHECK(ua < 1.0);
  }
  CHECK(all_equal);
  CHECK(any_diff_stream);
}

TEST_CASE("make_distribution parses the kind:key=value grammar") {
  CHECK(make_distribution("lognormal:p0=1,sigma=1,T=1").kind() ==
        DistKind::kLognormal);
  CHECK(make_distribution("lognormal:p0=2,sigma=0.5,horizon_T=2").mean() ==
        doctest::Approx(2.0));
  const ValueDistribution u = make_distribution("uniform:a=0,b=1");
  CHECK(u.kind() == DistKind::kUniform);
  CHECK_NEAR(u.mean(), 0.5, 1e-15);
  CHECK_NEAR(make_distribution("exponential:rate=2").mean(), 0.5, 1e-15);

  CHECK_THROWS_AS(make_distribution("weibull:k=1"), ParseError);
  CHECK_THROWS_AS(make_distribution("uniform"), ParseError);
  CHECK_THROWS_AS(make_distribution("uniform:a=0"), ParseError);
  CHECK_THROWS_AS(make_distribution("uniform:a=0,b=1,c=2"), ParseError);
  CHECK_THROWS_AS(make_distribution("uniform:a=zebra,b=1"), ParseError);
  CHECK_THROWS_AS(make_distribution("uniform:a=0,a=1"), ParseError);
  CHECK_THROWS_AS(make_distribution("lognormal:p0=1,sigma=1"), ParseError);
  CHECK_THROWS_AS(make_distribution("uniform:a=1,b=1"), DomainError);
  CHECK_THROWS_AS(make_distribution("exponential:rate=0"), DomainError);
  CHECK_THROWS_AS(make_distribution("lognormal:p0=0,sigma=1,T=1"), DomainError);
  CHECK_THROWS_AS(make_distribution("lognormal:p0=1,sigma=-1,T=1"), DomainError);
}
