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

#ifndef AUCTIONLAB_NORMAL_HPP_
#define AUCTIONLAB_NORMAL_HPP_

namespace auctionlab {

// Standard normal density.
double norm_pdf(double x);

// Standard normal CDF via the complementary error function; relative accuracy
// follows std::erfc (well below 1e-12 everywhere we use it).
double norm_cdf(double x);

// Inverse standard normal CDF. Rational initial guess polished with two
// Halley steps against the erfc-based CDF; max relative error < 1e-15 for
// p in (0, 1). Throws DomainError outside (0, 1).
double norm_quantile(double p);

}  // namespace auctionlab

#endif  // AUCTIONLAB_NORMAL_HPP_
