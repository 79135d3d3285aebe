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

#include "auctionlab/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>

#include "auctionlab/errors.hpp"

namespace auctionlab {

namespace {

constexpr long long kBlock = 4096;

// Runs block_fn(0..n_blocks-1) across the worker pool. Blocks are claimed
// from an atomic counter; each block touches only its own partial state, so
// the caller can fold the partials in block order and get the same bytes for
// any worker count.
void run_blocks(long long n_blocks,
                const std::function<void(long long)>& block_fn) {
  const long long cap = std::max<long long>(1, n_blocks);
  const int n_threads =
      static_cast<int>(std::min<long long>(cap, resolve_thread_count()));
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  const auto worker = [&] {
    try {
      for (;;) {
        const long long b = next.fetch_add(1, std::memory_order_relaxed);
        if (b >= n_blocks) return;
        block_fn(b);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
    }
  };
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

long long block_count(long long n_paths) {
  return (n_paths + kBlock - 1) / kBlock;
}

MeanSe summarize(double sum, double sq, long long n) {
  MeanSe m;
  m.mean = sum / static_cast<double>(n);
  const double var =
      (sq - static_cast<double>(n) * m.mean * m.mean) / static_cast<double>(n - 1);
  m.se = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
  return m;
}

void require_paths(long long n_paths) {
  if (n_paths < 1000) {
    throw DomainError("need at least 1000 simulation paths");
  }
}

// The whole uninformed side's bid for one path: the maximum over the
// symmetric period-1 bidders, or the mixed-strategy draw of the
// timing-uncertainty game.
double draw_period1_bid(const AuctionSpec& spec, const ThresholdResult& th,
                        RandomStream& s) {
  if (spec.alpha > 0.0) {
    return equilibrium_bid(spec, th, spec.dist.sample(s));
  }
  double best = 0.0;
  for (int i = 0; i < spec.n_period1; ++i) {
    best = std::max(best, period1_bid_sample_multi(spec, th, s));
  }
  return best;
}

}  // namespace

int resolve_thread_count() {
  const char* env = std::getenv("AUCTION_LAB_THREADS");
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) {
      return static_cast<int>(std::min(parsed, 1024L));
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

AuctionOutcome resolve_bids(const AuctionSpec& spec, double v,
                            double alice_bid, double bob_bid) {
  AuctionOutcome o;
  o.v = v;
  o.alice_bid = alice_bid;
  o.bob_bid = bob_bid;
  if (spec.alpha > 0.0) {
    o.bob_present = bob_bid > 0.0;
    if (!o.bob_present || alice_bid > bob_bid) {
      o.winner = Winner::kAlice;
      o.price_paid = alice_bid;
      o.alice_payoff = v - alice_bid;
    } else {
      o.winner = Winner::kBob;
      o.price_paid = bob_bid;
      o.bob_payoff = v - bob_bid;
    }
    o.revenue = o.price_paid;
    return o;
  }
  const double L = spec.limit_L;
  const bool bob_able = bob_bid >= L;
  const bool alice_able = alice_bid > L;
  if (bob_able && (!alice_able || bob_bid >= alice_bid)) {
    o.winner = Winner::kBob;
    o.price_paid = bob_bid;
    o.bob_payoff = v - bob_bid;
  } else if (alice_able) {
    o.winner = Winner::kAlice;
    o.price_paid = alice_bid;
    o.alice_payoff = v - alice_bid;
  } else {
    o.winner = Winner::kUnsold;
  }
  o.revenue = o.price_paid;
  return o;
}

AuctionOutcome resolve_auction(const AuctionSpec& spec,
                               const ThresholdResult& th, double v,
                               const std::vector<double>& period1_values) {
  double alice_bid = 0.0;
  for (const double pv : period1_values) {
    alice_bid = std::max(alice_bid, equilibrium_bid(spec, th, pv));
  }
  return resolve_bids(spec, v, alice_bid, equilibrium_bid(spec, th, v));
}

AuctionOutcome run_auction(const AuctionSpec& spec, const ThresholdResult& th,
                           RandomStream& s) {
  const double v = spec.dist.sample(s);
  const double alice_bid = draw_period1_bid(spec, th, s);
  return resolve_bids(spec, v, alice_bid, equilibrium_bid(spec, th, v));
}

SimReport estimate(const AuctionSpec& spec, long long n_paths,
                   std::uint64_t seed) {
  spec.validate();
  require_paths(n_paths);
  const ThresholdResult th = solve_for(spec);

  struct Partial {
    double sum[4] = {0.0, 0.0, 0.0, 0.0};
    double sq[4] = {0.0, 0.0, 0.0, 0.0};
    long long wins[3] = {0, 0, 0};
  };
  const long long n_blocks = block_count(n_paths);
  std::vector<Partial> parts(n_blocks);
  run_blocks(n_blocks, [&](long long b) {
    Partial& p = parts[b];
    const long long end = std::min(n_paths, (b + 1) * kBlock);
    for (long long i = b * kBlock; i < end; ++i) {
      RandomStream s(seed, static_cast<std::uint64_t>(i));
      const AuctionOutcome o = run_auction(spec, th, s);
      const double x[4] = {o.alice_payoff, o.bob_payoff, o.revenue,
                           o.alice_payoff + o.bob_payoff + o.revenue};
      for (int k = 0; k < 4; ++k) {
        p.sum[k] += x[k];
        p.sq[k] += x[k] * x[k];
      }
      ++p.wins[static_cast<int>(o.winner)];
    }
  });

  double sum[4] = {0.0, 0.0, 0.0, 0.0};
  double sq[4] = {0.0, 0.0, 0.0, 0.0};
  long long wins[3] = {0, 0, 0};
  for (const Partial& p : parts) {
    for (int k = 0; k < 4; ++k) {
      sum[k] += p.sum[k];
      sq[k] += p.sq[k];
    }
    for (int k = 0; k < 3; ++k) wins[k] += p.wins[k];
  }

  SimReport r;
  r.n_paths = n_paths;
  r.seed = seed;
  r.alice_payoff = summarize(sum[0], sq[0], n_paths);
  r.bob_payoff = summarize(sum[1], sq[1], n_paths);
  r.revenue = summarize(sum[2], sq[2], n_paths);
  r.total_surplus = summarize(sum[3], sq[3], n_paths);
  const double n = static_cast<double>(n_paths);
  r.win_alice = static_cast<double>(wins[0]) / n;
  r.win_bob = static_cast<double>(wins[1]) / n;
  r.win_unsold = static_cast<double>(wins[2]) / n;
  return r;
}

namespace {

// Shared grid-audit engine: per path draw whatever the equilibrium side
// needs once, then score every grid row on the same draws (common random
// numbers), accumulating per-block, per-row sums.
std::vector<AuditRow> run_audit(
    const AuctionSpec& spec, const std::vector<double>& grid,
    long long n_paths, std::uint64_t seed,
    const std::function<double(const ThresholdResult&, RandomStream&,
                               double)>& row_payoff) {
  spec.validate();
  require_paths(n_paths);
  if (grid.empty()) throw DomainError("audit grid must be non-empty");
  for (const double g : grid) {
    if (!std::isfinite(g)) throw DomainError("audit grid entries must be finite");
  }
  const ThresholdResult th = solve_for(spec);
  const std::size_t n_rows = grid.size();

  struct Partial {
    std::vector<double> sum, sq;
  };
  const long long n_blocks = block_count(n_paths);
  std::vector<Partial> parts(n_blocks);
  run_blocks(n_blocks, [&](long long b) {
    Partial& p = parts[b];
    p.sum.assign(n_rows, 0.0);
    p.sq.assign(n_rows, 0.0);
    const long long end = std::min(n_paths, (b + 1) * kBlock);
    for (long long i = b * kBlock; i < end; ++i) {
      for (std::size_t r = 0; r < n_rows; ++r) {
        RandomStream s(seed, static_cast<std::uint64_t>(i));
        const double pay = row_payoff(th, s, grid[r]);
        p.sum[r] += pay;
        p.sq[r] += pay * pay;
      }
    }
  });

  std::vector<AuditRow> rows(n_rows);
  for (std::size_t r = 0; r < n_rows; ++r) {
    double sum = 0.0, sq = 0.0;
    for (const Partial& p : parts) {
      sum += p.sum[r];
      sq += p.sq[r];
    }
    const MeanSe m = summarize(sum, sq, n_paths);
    rows[r] = AuditRow{grid[r], m.mean, m.se, 0.0};
  }
  return rows;
}

}  // namespace

std::vector<AuditRow> audit_alice(const AuctionSpec& spec,
                                  const std::vector<double>& bids,
                                  long long n_paths, std::uint64_t seed) {
  for (const double b : bids) {
    if (b < 0.0) throw DomainError("uninformed audit bids must be non-negative");
  }
  std::vector<AuditRow> rows = run_audit(
      spec, bids, n_paths, seed,
      [&spec](const ThresholdResult& th, RandomStream& s, double bid) {
        const double v = spec.dist.sample(s);
        return resolve_bids(spec, v, bid, equilibrium_bid(spec, th, v))
            .alice_payoff;
      });
  const double reference =
      spec.alpha > 0.0 ? spec.alpha * spec.dist.mean() : 0.0;
  for (AuditRow& r : rows) {
    r.z = r.se > 0.0 ? (r.mean - reference) / r.se : 0.0;
  }
  return rows;
}

std::vector<AuditRow> audit_bob(const AuctionSpec& spec,
                                const std::vector<double>& shifts,
                                long long n_paths, std::uint64_t seed) {
  const auto zero = std::find(shifts.begin(), shifts.end(), 0.0);
  if (zero == shifts.end()) {
    throw DomainError("informed audit shifts must include 0 (the reference row)");
  }
  std::vector<AuditRow> rows = run_audit(
      spec, shifts, n_paths, seed,
      [&spec](const ThresholdResult& th, RandomStream& s, double shift) {
        const double v = spec.dist.sample(s);
        const double alice_bid = draw_period1_bid(spec, th, s);
        const double raw =
            std::max(equilibrium_bid(spec, th, v) + shift, 0.0);
        return resolve_bids(spec, v, alice_bid, raw).bob_payoff;
      });
  const double reference =
      rows[static_cast<std::size_t>(zero - shifts.begin())].mean;
  for (AuditRow& r : rows) {
    r.z = r.se > 0.0 ? (r.mean - reference) / r.se : 0.0;
  }
  return rows;
}

std::vector<WinCurveBin> empirical_win_curve(const AuctionSpec& spec,
                                             long long n_paths, int n_bins,
                                             std::uint64_t seed) {
  spec.validate();
  require_paths(n_paths);
  if (spec.limit_L != 0.0 || spec.alpha > 0.0) {
    throw DomainError(
        "the win-curve identity P(win|v) = F(v) is the reserve-free, "
        "always-present configuration");
  }
  if (n_bins < 2) throw DomainError("need at least 2 win-curve bins");
  const ThresholdResult th = solve_for(spec);

  struct Partial {
    std::vector<long long> count, bob;
  };
  const long long n_blocks = block_count(n_paths);
  std::vector<Partial> parts(n_blocks);
  run_blocks(n_blocks, [&](long long b) {
    Partial& p = parts[b];
    p.count.assign(n_bins, 0);
    p.bob.assign(n_bins, 0);
    const long long end = std::min(n_paths, (b + 1) * kBlock);
    for (long long i = b * kBlock; i < end; ++i) {
      RandomStream s(seed, static_cast<std::uint64_t>(i));
      const AuctionOutcome o = run_auction(spec, th, s);
      const int k = std::min(
          n_bins - 1,
          static_cast<int>(spec.dist.cdf(o.v) * static_cast<double>(n_bins)));
      ++p.count[k];
      if (o.winner == Winner::kBob) ++p.bob[k];
    }
  });

  std::vector<WinCurveBin> bins(n_bins);
  for (int k = 0; k < n_bins; ++k) {
    long long count = 0, bob = 0;
    for (const Partial& p : parts) {
      count += p.count[k];
      bob += p.bob[k];
    }
    const double center_u = (k + 0.5) / static_cast<double>(n_bins);
    bins[k].v_center = spec.dist.quantile(center_u);
    bins[k].expected = center_u;
    bins[k].observed =
        count > 0 ? static_cast<double>(bob) / static_cast<double>(count) : 0.0;
    bins[k].count = count;
  }
  return bins;
}

}  // namespace auctionlab
