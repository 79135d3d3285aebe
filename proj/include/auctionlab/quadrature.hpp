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

#ifndef AUCTIONLAB_QUADRATURE_HPP_
#define AUCTIONLAB_QUADRATURE_HPP_

#include <functional>

namespace auctionlab {

// Adaptive integration of a smooth function over the finite interval [a, b]
// to the given absolute tolerance. 10-point Gauss-Legendre panels; a panel is
// accepted when the whole-panel value agrees with the sum over its halves,
// otherwise the halves recurse with the tolerance split between them.
// Callers with semi-infinite integrands pass a finite cutoff chosen so the
// discarded tail is below tolerance. Throws ConvergenceError if the recursion
// exceeds its depth budget (non-smooth integrand or hopeless tolerance).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10);

}  // namespace auctionlab

#endif  // AUCTIONLAB_QUADRATURE_HPP_
