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

#include "auctionlab/pricing.hpp"

#include <algorithm>
#include <cmath>

#include "auctionlab/equilibrium.hpp"
#include "auctionlab/errors.hpp"
#include "auctionlab/normal.hpp"
#include "auctionlab/quadrature.hpp"

namespace auctionlab {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// Shared geometry of the closed-form GBM expressions, everything normalized
// by the spot (p0 = 1, l = L / p0).
struct GbmGrid {
  double s = 0.0;       // sigma * sqrt(T)
  double v_bar = 0.0;   // censoring threshold for reserve l
  double a_plus = 0.0;  // ln(v_bar)/s + s/2
  double a_minus = 0.0; // ln(v_bar)/s - s/2
  double l_plus = 0.0;  // ln(l)/s + s/2
  double l_minus = 0.0; // ln(l)/s - s/2
};

GbmGrid make_grid(double sigma, double T, double l) {
  GbmGrid grid;
  grid.s = sigma * std::sqrt(T);
  const ValueDistribution unit = ValueDistribution::lognormal(1.0, sigma, T);
  grid.v_bar = solve_threshold(unit, l).v_bar;
  const double a = std::log(grid.v_bar);
  grid.a_plus = a / grid.s + 0.5 * grid.s;
  grid.a_minus = a / grid.s - 0.5 * grid.s;
  const double ll = std::log(l);
  grid.l_plus = ll / grid.s + 0.5 * grid.s;
  grid.l_minus = ll / grid.s - 0.5 * grid.s;
  return grid;
}

// J = s * int_{a_plus}^inf phi(u) Phi(u - s) du; the integrand is below
// phi(u) so 40 standard deviations past max(a_plus, s) is exhaustive.
double tail_product_integral(const GbmGrid& grid, double tol) {
  const double hi = std::max(grid.a_plus, grid.s) + 42.0;
  const double s = grid.s;
  return s * integrate(
                 [s](double u) { return norm_pdf(u) * norm_cdf(u - s); },
                 grid.a_plus, hi, tol);
}

// Normalized profit of the informed bidder: spot 1, reserve l in (0, 1).
double profit_gbm_impl(double sigma, double T, double l, double tol) {
  const GbmGrid g = make_grid(sigma, T, l);
  const double j = tail_product_integral(g, tol);
  return 1.0 - norm_cdf(g.a_minus) * norm_cdf(g.a_plus) - (2.0 / g.s) * j +
         norm_cdf(g.a_minus) * norm_cdf(g.l_plus) -
         norm_cdf(g.a_plus) * norm_cdf(g.l_minus);
}

// Numeric upper cap for value-space tail integrals. Mass beyond it is folded
// back in closed form via expected_excess, so nothing rides on quadrature
// panels ever sampling the far tail.
double upper_cap(const ValueDistribution& d) { return d.quantile(1.0 - 1e-8); }

// E[(v - x)^+], exact from the distribution's lower-tail moment.
double expected_excess(const ValueDistribution& d, double x) {
  return d.mean() - d.partial_expectation(x) - x * (1.0 - d.cdf(x));
}

void check_reserve_gbm(const GbmParams& g, double L) {
  g.validate();
  if (!(L >= 0.0) || !std::isfinite(L)) {
    throw DomainError("reserve must be a finite non-negative number");
  }
  if (L >= g.p0) {
    throw DegenerateRegime(
        "reserve at or above the mean terminal value: the informed bidder "
        "abstains and the closed forms do not apply");
  }
}

}  // namespace

void GbmParams::validate() const {
  if (!(p0 > 0.0) || !std::isfinite(p0)) {
    throw DomainError("spot p0 must be positive and finite");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("volatility sigma must be positive and finite");
  }
  if (!(horizon_T > 0.0) || !std::isfinite(horizon_T)) {
    throw DomainError("horizon T must be positive and finite");
  }
}

double margrabe_exchange(const GbmParams& g) {
  g.validate();
  return g.p0 * (2.0 * norm_cdf(g.sigma * std::sqrt(0.5 * g.horizon_T)) - 1.0);
}

double theta_L0(const GbmParams& g) {
  g.validate();
  return g.p0 * g.sigma / std::sqrt(2.0 * g.horizon_T) *
         norm_pdf(g.sigma * std::sqrt(0.5 * g.horizon_T));
}

double bs_call(const GbmParams& g, double strike) {
  g.validate();
  if (!(strike >= 0.0) || !std::isfinite(strike)) {
    throw DomainError("strike must be a finite non-negative number");
  }
  if (strike == 0.0) return g.p0;
  const double s = g.sigma * std::sqrt(g.horizon_T);
  const double d1 = std::log(g.p0 / strike) / s + 0.5 * s;
  return g.p0 * norm_cdf(d1) - strike * norm_cdf(d1 - s);
}

double monopolist_theta(const GbmParams& g, double strike) {
  g.validate();
  if (!(strike > 0.0) || !std::isfinite(strike)) {
    throw DomainError("strike must be positive and finite");
  }
  const double s = g.sigma * std::sqrt(g.horizon_T);
  const double d1 = std::log(g.p0 / strike) / s + 0.5 * s;
  return g.p0 * g.sigma / (2.0 * std::sqrt(g.horizon_T)) * norm_pdf(d1);
}

double profit_last_mover_gbm(const GbmParams& g, double L) {
  check_reserve_gbm(g, L);
  if (L == 0.0) return margrabe_exchange(g);
  return g.p0 * profit_gbm_impl(g.sigma, g.horizon_T, L / g.p0, 1e-12);
}

double theta_last_mover_fd(const GbmParams& g, double L) {
  check_reserve_gbm(g, L);
  const double T = g.horizon_T;
  const double h = std::min(std::max(1e-4 * T, 1e-7), 0.5 * T);
  const double l = L / g.p0;
  const auto profit_at = [&](double t) {
    if (L == 0.0) {
      return margrabe_exchange(GbmParams{g.p0, g.sigma, t});
    }
    // Tight quadrature tolerance so the differenced noise stays far below
    // the h^4 truncation error of the extrapolated stencil.
    return g.p0 * profit_gbm_impl(g.sigma, t, l, 1e-13);
  };
  const double coarse = (profit_at(T + h) - profit_at(T - h)) / (2.0 * h);
  const double fine = (profit_at(T + 0.5 * h) - profit_at(T - 0.5 * h)) / h;
  return (4.0 * fine - coarse) / 3.0;
}

double theta_last_mover_closed(const GbmParams& g, double L) {
  check_reserve_gbm(g, L);
  if (L == 0.0) {
    throw DomainError(
        "closed-form theta needs a positive reserve; use theta_L0 at L = 0");
  }
  const double sigma = g.sigma;
  const double T = g.horizon_T;
  const double l = L / g.p0;
  const GbmGrid grid = make_grid(sigma, T, l);
  const double s = grid.s;
  const double vb = grid.v_bar;
  const double j = tail_product_integral(grid, 1e-13);
  // J2 carries the same tail integrand weighted by the squared substitution
  // variable w = s (u - s/2).
  const double hi = std::max(grid.a_plus, s) + 42.0;
  const double j2 =
      s * integrate(
              [s](double u) {
                const double w = s * (u - 0.5 * s);
                return norm_pdf(u) * norm_cdf(u - s) * w * w;
              },
              grid.a_plus, hi, 1e-13);

  const double sig_rt = sigma / std::sqrt(T);
  const double t1 = norm_cdf(grid.a_minus) * sig_rt *
                    (0.5 * norm_pdf(grid.l_plus) +
                     grid.a_minus * norm_pdf(grid.a_plus) / s);
  const double t2 = sigma * vb * norm_pdf(grid.a_plus) /
                    (2.0 * std::sqrt(T) * (vb - l)) *
                    (l * norm_cdf(grid.l_plus) - norm_cdf(grid.l_minus));
  const double z = std::log(vb) / (s / std::sqrt(2.0));
  const double t3 = (0.5 / std::sqrt(2.0)) *
                    (sigma * std::exp(-0.25 * sigma * sigma * T) *
                     kInvSqrt2Pi / std::sqrt(T)) *
                    ((std::sqrt(2.0) / s) * norm_pdf(z) + 1.0 - norm_cdf(z));
  const double inv_var = 1.0 / (sigma * sigma * T);
  const double t4 = sig_rt * (inv_var + 0.25) * j;
  const double t5 = -sig_rt * inv_var * inv_var * j2;
  return g.p0 * (t1 + t2 + t3 + t4 + t5);
}

ProfitBreakdown profit_last_mover_generic(const ValueDistribution& d,
                                          double L) {
  if (!(L >= 0.0) || !std::isfinite(L)) {
    throw DomainError("reserve must be a finite non-negative number");
  }
  if (L >= d.mean()) {
    throw DegenerateRegime(
        "reserve at or above the mean value: the informed bidder abstains");
  }
  const ThresholdResult th = solve_threshold(d, L);
  const double vb = th.v_bar;
  const double f_vb = d.cdf(vb);
  const double pe_vb = d.partial_expectation(vb);

  ProfitBreakdown out;
  // (F - F(v_bar))(1 - F) integrates numerically to the cap; past it the
  // integrand is (1 - F(v_bar))(1 - F) up to an O((1-F(cap))^2) sliver, so
  // the remainder is the closed-form excess.
  const double cap = std::max(upper_cap(d), vb);
  const double tail = integrate(
                          [&d, f_vb](double t) {
                            const double f = d.cdf(t);
                            return (f - f_vb) * (1.0 - f);
                          },
                          vb, cap, 1e-12) +
                      (1.0 - f_vb) * expected_excess(d, cap);
  out.exchange_term = tail + f_vb * (d.mean() - pe_vb);
  out.range_term =
      f_vb * (pe_vb - d.partial_expectation(L) - L * (f_vb - d.cdf(L)));
  out.binary_term = L * f_vb * (1.0 - f_vb);
  out.total = out.exchange_term + out.range_term - out.binary_term;
  return out;
}

DominanceTriple exchange_dominance_check(const ValueDistribution& d) {
  DominanceTriple out;
  const double cap = upper_cap(d);
  out.exchange = integrate(
                     [&d](double t) {
                       const double f = d.cdf(t);
                       return f * (1.0 - f);
                     },
                     d.support_lo(), cap, 1e-12) +
                 expected_excess(d, cap);
  const double strike = d.mean();
  const double f_k = d.cdf(strike);
  const double pe_k = d.partial_expectation(strike);
  out.atm_call = (d.mean() - pe_k) - strike * (1.0 - f_k);
  out.atm_put = strike * f_k - pe_k;
  return out;
}

double revenue_expected(const ValueDistribution& d, double L) {
  if (!(L >= 0.0) || !std::isfinite(L)) {
    throw DomainError("reserve must be a finite non-negative number");
  }
  if (L >= d.mean()) {
    // Degenerate strategies: the informed bidder abstains, the uninformed
    // bidder still posts L and trades whenever the value clears it.
    return L * (1.0 - d.cdf(L));
  }
  const ThresholdResult th = solve_threshold(d, L);
  const double f_vb = d.cdf(th.v_bar);
  const double f_l = d.cdf(L);
  // int PE(x) f(x) dx over [v_bar, inf) in probability space: the integrand
  // PE(quantile(u)) is bounded by the mean and tail-free on [F(v_bar), 1).
  const double upper = integrate(
      [&d](double u) { return d.partial_expectation(d.quantile(u)); }, f_vb,
      1.0, 1e-12);
  return L * (f_vb * f_vb - f_l * f_l) + 2.0 * upper;
}

double alice_profit_uncertain(const ValueDistribution& d, double alpha) {
  if (!(alpha >= 0.0) || !(alpha < 1.0)) {
    throw DomainError("absence probability alpha must lie in [0, 1)");
  }
  return alpha * d.mean();
}

}  // namespace auctionlab
