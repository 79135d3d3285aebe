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

#ifndef AUCTIONLAB_RANDOM_HPP_
#define AUCTIONLAB_RANDOM_HPP_

#include <cstdint>

namespace auctionlab {

// Counter-based splittable stream built on splitmix64.
//
// Stream derivation: the initial state is mix64(seed + GOLDEN * (index + 1)),
// where mix64 is splitmix64's avalanche finalizer. The finalizer scatters
// (seed, stream_index) pairs to effectively random offsets of the 2^64-period
// splitmix64 orbit, so disjoint stream indices give statistically independent
// sequences while identical (seed, index) pairs replay identical draws on any
// platform. Parallel code allocates one stream per Monte Carlo path and never
// shares a stream across threads.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_index)
      : state_(mix64(seed + kGolden * (stream_index + 1))) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  // Uniform double strictly inside (0, 1): 53-bit mantissa, half-ulp offset.
  // The open interval keeps inverse-CDF sampling away from infinite quantiles.
  double next_double() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace auctionlab

#endif  // AUCTIONLAB_RANDOM_HPP_
