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

#include "auctionlab/quadrature.hpp"

#include <cmath>

#include "auctionlab/errors.hpp"

namespace auctionlab {
namespace {

// 10-point Gauss-Legendre abscissae (positive half) and weights on [-1, 1].
constexpr double kNodes[5] = {0.14887433898163116, 0.43339539412924721,
                              0.67940956829902444, 0.86506336668898443,
                              0.97390652851717174};
constexpr double kWeights[5] = {0.29552422471475331, 0.26926671930999674,
                                0.21908636251598224, 0.14945134915058053,
                                0.066671344308687139};

double gauss10(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double dx = half * kNodes[i];
    acc += kWeights[i] * (f(mid - dx) + f(mid + dx));
  }
  return acc * half;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth) {
  if (depth > 60) {
    throw ConvergenceError("integrate: adaptive subdivision exceeded depth budget");
  }
  const double mid = 0.5 * (a + b);
  const double left = gauss10(f, a, mid);
  const double right = gauss10(f, mid, b);
  const double err = std::fabs(left + right - whole);
  if (err <= tol || (b - a) < 1e-14 * (std::fabs(a) + std::fabs(b) + 1.0)) {
    return left + right;
  }
  return adapt(f, a, mid, left, 0.5 * tol, depth + 1) +
         adapt(f, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  if (!(abs_tol > 0.0)) throw DomainError("integrate: tolerance must be positive");
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, abs_tol);
  return adapt(f, a, b, gauss10(f, a, b), abs_tol, 0);
}

}  // namespace auctionlab
