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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "auctionlab/distribution.hpp"
#include "auctionlab/equilibrium.hpp"
#include "auctionlab/errors.hpp"
#include "auctionlab/pricing.hpp"
#include "auctionlab/report.hpp"
#include "auctionlab/sim.hpp"

namespace {

using namespace auctionlab;

std::string num(double x) { return fmt_sig9(x); }

void emit(const std::string& text) {
  std::fwrite(text.data(), 1, text.size(), stdout);
}

std::string trim(const std::string& text) {
  const std::size_t b = text.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const std::size_t e = text.find_last_not_of(" \t\r");
  return text.substr(b, e - b + 1);
}

// Config support: a flat key=value file named by --config. Explicit
// command-line flags take precedence, so the file's pairs are appended as
// synthetic "--key value" arguments only when the flag is absent; they then
// pass through the same option parsing and validation as real flags.
std::vector<std::string> inject_config_args(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("config line " + std::to_string(lineno) +
                       " is not key=value: '" + text + "'");
    }
    const std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    if (value.size() >= 2 &&
        ((value.front() == '"' && value.back() == '"') ||
         (value.front() == '\'' && value.back() == '\''))) {
      value = value.substr(1, value.size() - 2);
    }
    if (key == "config") {
      throw ParseError("config files cannot nest via the 'config' key");
    }
    const std::string flag = "--" + key;
    bool given = false;
    for (const std::string& a : args) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) {
        given = true;
        break;
      }
    }
    if (!given) {
      args.push_back(flag);
      args.push_back(value);
    }
  }
  return args;
}

// ---------------------------------------------------------------- solve

struct SolveOpts {
  std::string dist;
  double limit = 0.0;
  double alpha = 0.0;
};

void run_solve(const SolveOpts& o) {
  const ValueDistribution d = make_distribution(o.dist);
  const AuctionSpec spec{d, o.limit, o.alpha, 1};
  spec.validate();
  const ThresholdResult th = solve_for(spec);
  if (!th.interior) {
    throw DegenerateRegime(
        "reserve at or above the mean value, no interior threshold");
  }
  std::string out;
  out += (spec.alpha > 0.0 ? "v_bar_alpha=" : "v_bar=") + fmt_sig6(th.v_bar) +
         "\n";
  out += "residual=" + fmt_sig6(th.residual) + "\n";
  out += csv_line({"v", "bob_bid"});
  for (int k = 0; k < 200; ++k) {
    const double v = d.quantile((k + 0.5) / 200.0);
    out += csv_line({num(v), num(equilibrium_bid(spec, th, v))});
  }
  emit(out);
}

// ---------------------------------------------------------------- price

struct PriceOpts {
  double sigma = 0.0;
  double horizon = 0.0;
  double limit = 0.0;
  double p0 = 1.0;
};

void run_price(const PriceOpts& o) {
  const GbmParams g{o.p0, o.sigma, o.horizon};
  g.validate();
  if (!(o.limit >= 0.0) || !std::isfinite(o.limit)) {
    throw DomainError("limit must be a finite non-negative number");
  }
  std::string out =
      csv_line({"pi_b_quadrature", "pi_b_margrabe_when_L0", "pi_m_call",
                "theta_b_fd", "theta_b_closed", "theta_m", "v_bar"});
  if (o.limit >= o.p0) {
    // Degenerate regime: the informed bidder faces no effective competition
    // and his profit/theta equal the uncontested (monopolist) values.
    const double call = bs_call(g, o.limit);
    const double th_m = monopolist_theta(g, o.limit);
    out += csv_line({num(call), "", num(call), num(th_m), "", num(th_m), ""});
  } else {
    const ValueDistribution d =
        ValueDistribution::lognormal(o.p0, o.sigma, o.horizon);
    const double pi_q = profit_last_mover_generic(d, o.limit).total;
    const double v_bar = solve_threshold(d, o.limit).v_bar;
    const double th_fd = theta_last_mover_fd(g, o.limit);
    const double th_cl =
        o.limit > 0.0 ? theta_last_mover_closed(g, o.limit) : theta_L0(g);
    const double th_m = o.limit > 0.0 ? monopolist_theta(g, o.limit) : 0.0;
    const std::string mar =
        o.limit == 0.0 ? num(margrabe_exchange(g)) : std::string();
    out += csv_line({num(pi_q), mar, num(bs_call(g, o.limit)), num(th_fd),
                     num(th_cl), num(th_m), num(v_bar)});
  }
  emit(out);
}

// ---------------------------------------------------------------- simulate

struct SimulateOpts {
  std::string dist;
  double limit = 0.0;
  double alpha = 0.0;
  int bidders = 1;
  long long paths = 0;
  std::uint64_t seed = 1;
};

void run_simulate(const SimulateOpts& o) {
  const AuctionSpec spec{make_distribution(o.dist), o.limit, o.alpha,
                         o.bidders};
  const SimReport r = estimate(spec, o.paths, o.seed);
  std::string out = csv_line(
      {"n_paths", "seed", "alice_payoff_mean", "alice_payoff_se",
       "bob_payoff_mean", "bob_payoff_se", "revenue_mean", "revenue_se",
       "total_surplus_mean", "total_surplus_se", "win_alice", "win_bob",
       "win_unsold"});
  out += csv_line({std::to_string(r.n_paths), std::to_string(r.seed),
                   num(r.alice_payoff.mean), num(r.alice_payoff.se),
                   num(r.bob_payoff.mean), num(r.bob_payoff.se),
                   num(r.revenue.mean), num(r.revenue.se),
                   num(r.total_surplus.mean), num(r.total_surplus.se),
                   num(r.win_alice), num(r.win_bob), num(r.win_unsold)});
  emit(out);
}

// ---------------------------------------------------------------- audit

struct AuditOpts {
  std::string player;
  std::string dist;
  std::string grid;
  double grid_from = 0.0;
  double grid_to = 0.0;
  int grid_steps = 0;
  double limit = 0.0;
  double alpha = 0.0;
  int bidders = 1;
  long long paths = 0;
  std::uint64_t seed = 1;
};

std::vector<double> build_grid(const AuditOpts& o) {
  std::vector<double> grid;
  if (!o.grid.empty()) {
    std::string item;
    std::stringstream ss(o.grid);
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(item, &used);
      } catch (const std::exception&) {
        throw ParseError("bad grid entry '" + item + "'");
      }
      if (used != item.size()) {
        throw ParseError("bad grid entry '" + item + "'");
      }
      grid.push_back(value);
    }
  } else if (o.grid_steps != 0) {
    if (o.grid_steps < 2) throw DomainError("grid needs at least 2 steps");
    if (!(o.grid_from < o.grid_to)) {
      throw DomainError("grid needs from < to");
    }
    for (int i = 0; i < o.grid_steps; ++i) {
      grid.push_back(o.grid_from + (o.grid_to - o.grid_from) * i /
                                       (o.grid_steps - 1));
    }
  }
  return grid;
}

void run_audit(const AuditOpts& o) {
  const AuctionSpec spec{make_distribution(o.dist), o.limit, o.alpha,
                         o.bidders};
  const std::vector<double> grid = build_grid(o);
  const std::vector<AuditRow> rows =
      o.player == "alice" ? audit_alice(spec, grid, o.paths, o.seed)
                          : audit_bob(spec, grid, o.paths, o.seed);
  std::string out = csv_line({"point", "mean", "se", "z_vs_reference"});
  for (const AuditRow& r : rows) {
    out += csv_line({num(r.point), num(r.mean), num(r.se), num(r.z)});
  }
  emit(out);
}

// ---------------------------------------------------------------- sweep

struct SweepOpts {
  std::string parameter;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  double p0 = 1.0;
  double sigma = 1.0;
  double horizon = 1.0;
  double limit = 0.0;
  long long mc_paths = 0;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string svg_path;
};

void run_sweep(const SweepOpts& o) {
  if (o.steps < 2) throw DomainError("sweep needs at least 2 steps");
  if (!(o.from < o.to)) throw DomainError("sweep needs from < to");
  std::vector<double> xs(o.steps);
  for (int i = 0; i < o.steps; ++i) {
    xs[i] = o.from + (o.to - o.from) * i / (o.steps - 1);
  }

  std::string csv;
  std::vector<SvgSeries> series;
  std::string title, x_label, y_label;
  if (o.parameter == "horizon_T") {
    title = "informed-bidder profit and seller revenue vs horizon";
    x_label = "T";
    y_label = "value";
    csv += csv_line({"T", "pi_b_analytic", "revenue_analytic", "pi_b_mc",
                     "pi_b_mc_se", "revenue_mc", "revenue_mc_se",
                     "total_check"});
    SvgSeries s_pi{"pi_b_analytic", {}, {}};
    SvgSeries s_rev{"revenue_analytic", {}, {}};
    SvgSeries s_pi_mc{"pi_b_mc", {}, {}};
    SvgSeries s_rev_mc{"revenue_mc", {}, {}};
    for (const double T : xs) {
      const GbmParams g{o.p0, o.sigma, T};
      const ValueDistribution d =
          ValueDistribution::lognormal(o.p0, o.sigma, T);
      const double pi = profit_last_mover_gbm(g, o.limit);
      const double rev = revenue_expected(d, o.limit);
      std::string pi_mc, pi_mc_se, rev_mc, rev_mc_se;
      if (o.mc_paths > 0) {
        const SimReport r =
            estimate(AuctionSpec{d, o.limit, 0.0, 1}, o.mc_paths, o.seed);
        pi_mc = num(r.bob_payoff.mean);
        pi_mc_se = num(r.bob_payoff.se);
        rev_mc = num(r.revenue.mean);
        rev_mc_se = num(r.revenue.se);
        s_pi_mc.x.push_back(T);
        s_pi_mc.y.push_back(r.bob_payoff.mean);
        s_rev_mc.x.push_back(T);
        s_rev_mc.y.push_back(r.revenue.mean);
      }
      csv += csv_line({num(T), num(pi), num(rev), pi_mc, pi_mc_se, rev_mc,
                       rev_mc_se, num(pi + rev)});
      s_pi.x.push_back(T);
      s_pi.y.push_back(pi);
      s_rev.x.push_back(T);
      s_rev.y.push_back(rev);
    }
    series.push_back(s_pi);
    series.push_back(s_rev);
    if (!s_pi_mc.x.empty()) {
      series.push_back(s_pi_mc);
      series.push_back(s_rev_mc);
    }
  } else {
    title = "informed-bidder timing sensitivity vs reserve";
    x_label = "L";
    y_label = "theta";
    csv += csv_line({"L", "v_bar", "theta_lastmover_fd",
                     "theta_lastmover_closed", "theta_monopolist"});
    SvgSeries s_vb{"v_bar", {}, {}};
    SvgSeries s_fd{"theta_lastmover_fd", {}, {}};
    SvgSeries s_cl{"theta_lastmover_closed", {}, {}};
    SvgSeries s_m{"theta_monopolist", {}, {}};
    const GbmParams g{o.p0, o.sigma, o.horizon};
    const ValueDistribution d =
        ValueDistribution::lognormal(o.p0, o.sigma, o.horizon);
    for (const double L : xs) {
      const ThresholdResult th = solve_threshold(d, L);
      if (!th.interior) {
        throw DegenerateRegime("sweep reserve reached the mean value");
      }
      const double fd = theta_last_mover_fd(g, L);
      const double cl =
          L > 0.0 ? theta_last_mover_closed(g, L) : theta_L0(g);
      const double mono = L > 0.0 ? monopolist_theta(g, L) : 0.0;
      csv += csv_line({num(L), num(th.v_bar), num(fd), num(cl), num(mono)});
      s_vb.x.push_back(L);
      s_vb.y.push_back(th.v_bar);
      s_fd.x.push_back(L);
      s_fd.y.push_back(fd);
      s_cl.x.push_back(L);
      s_cl.y.push_back(cl);
      s_m.x.push_back(L);
      s_m.y.push_back(mono);
    }
    series = {s_vb, s_fd, s_cl, s_m};
  }

  write_text_file(o.out_path, csv);
  if (!o.svg_path.empty()) {
    write_text_file(o.svg_path,
                    render_line_chart(title, x_label, y_label, series));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "auction-lab: equilibrium, pricing, and simulation for a common-value "
      "auction with a last-moving informed bidder"};
  app.require_subcommand(1);

  SolveOpts solve_opts;
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve the bidding threshold and emit the bid schedule");
  std::string solve_config;
  solve->add_option("--config", solve_config,
                  "Flat key=value config file; explicit flags take precedence");
  solve->add_option("--dist", solve_opts.dist,
                    "Value distribution, kind:key=value,... "
                    "(lognormal|uniform|exponential)")
      ->required();
  solve->add_option("--limit", solve_opts.limit, "Reserve (limit) price L");
  solve->add_option("--alpha", solve_opts.alpha,
                    "Probability the informed bidder is absent");
  solve->callback([&] { run_solve(solve_opts); });

  PriceOpts price_opts;
  CLI::App* price = app.add_subcommand(
      "price", "Closed-form and quadrature pricing of the informed profit");
  std::string price_config;
  price->add_option("--config", price_config,
                  "Flat key=value config file; explicit flags take precedence");
  price->add_option("--sigma", price_opts.sigma, "GBM volatility")->required();
  price->add_option("--horizon", price_opts.horizon, "Latency horizon T")
      ->required();
  price->add_option("--limit", price_opts.limit, "Reserve (limit) price L")
      ->required();
  price->add_option("--p0", price_opts.p0, "Spot value (default 1)");
  price->callback([&] { run_price(price_opts); });

  SimulateOpts sim_opts;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo estimate of payoffs, revenue, and win shares");
  std::string simulate_config;
  simulate->add_option("--config", simulate_config,
                  "Flat key=value config file; explicit flags take precedence");
  simulate->add_option("--dist", sim_opts.dist, "Value distribution")
      ->required();
  simulate->add_option("--limit", sim_opts.limit, "Reserve (limit) price L");
  simulate->add_option("--alpha", sim_opts.alpha,
                       "Probability the informed bidder is absent");
  simulate->add_option("--bidders", sim_opts.bidders,
                       "Number of uninformed period-1 bidders");
  simulate->add_option("--paths", sim_opts.paths, "Number of paths")
      ->required();
  simulate->add_option("--seed", sim_opts.seed, "RNG seed");
  simulate->callback([&] { run_simulate(sim_opts); });

  AuditOpts audit_opts;
  CLI::App* audit = app.add_subcommand(
      "audit", "Fixed-strategy payoff grids against the equilibrium opponent");
  std::string audit_config;
  audit->add_option("--config", audit_config,
                  "Flat key=value config file; explicit flags take precedence");
  audit->add_option("--player", audit_opts.player, "alice|bob")
      ->required()
      ->check(CLI::IsMember({"alice", "bob"}));
  audit->add_option("--dist", audit_opts.dist, "Value distribution")
      ->required();
  audit->add_option("--grid", audit_opts.grid,
                    "Comma-separated bid (alice) or shift (bob) grid");
  audit->add_option("--grid-from", audit_opts.grid_from, "Grid start");
  audit->add_option("--grid-to", audit_opts.grid_to, "Grid end");
  audit->add_option("--grid-steps", audit_opts.grid_steps,
                    "Grid point count (>= 2)");
  audit->add_option("--limit", audit_opts.limit, "Reserve (limit) price L");
  audit->add_option("--alpha", audit_opts.alpha,
                    "Probability the informed bidder is absent");
  audit->add_option("--bidders", audit_opts.bidders,
                    "Number of uninformed period-1 bidders");
  audit->add_option("--paths", audit_opts.paths, "Number of paths")
      ->required();
  audit->add_option("--seed", audit_opts.seed, "RNG seed");
  audit->callback([&] { run_audit(audit_opts); });

  SweepOpts sweep_opts;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Parameter sweep to CSV (and optional SVG chart)");
  std::string sweep_config;
  sweep->add_option("--config", sweep_config,
                  "Flat key=value config file; explicit flags take precedence");
  sweep->add_option("--parameter", sweep_opts.parameter,
                    "Swept parameter: horizon_T or limit_L")
      ->required()
      ->check(CLI::IsMember({"horizon_T", "limit_L"}));
  sweep->add_option("--from", sweep_opts.from, "Grid start")->required();
  sweep->add_option("--to", sweep_opts.to, "Grid end")->required();
  sweep->add_option("--steps", sweep_opts.steps, "Grid point count (>= 2)")
      ->required();
  sweep->add_option("--p0", sweep_opts.p0, "Spot value");
  sweep->add_option("--sigma", sweep_opts.sigma, "GBM volatility");
  sweep->add_option("--horizon", sweep_opts.horizon,
                    "Latency horizon T (fixed during limit_L sweeps)");
  sweep->add_option("--limit", sweep_opts.limit,
                    "Reserve price L (fixed during horizon_T sweeps)");
  sweep->add_option("--mc-paths", sweep_opts.mc_paths,
                    "Monte Carlo paths per grid point (0 = analytics only)");
  sweep->add_option("--seed", sweep_opts.seed, "RNG seed");
  sweep->add_option("--out", sweep_opts.out_path, "Output CSV path")
      ->required();
  sweep->add_option("--svg", sweep_opts.svg_path, "Optional SVG chart path");
  sweep->callback([&] { run_sweep(sweep_opts); });

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = inject_config_args(std::move(args));
    std::vector<const char*> cargs;
    cargs.reserve(args.size() + 1);
    cargs.push_back(argv[0]);
    for (const std::string& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DegenerateRegime& e) {
    std::fprintf(stderr, "error: degenerate regime: %s\n", e.what());
    return 3;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
