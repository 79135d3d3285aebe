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

#ifndef AUCTIONLAB_ERRORS_HPP_
#define AUCTIONLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace auctionlab {

// Malformed textual input (distribution spec strings, config values).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input whose value violates a documented precondition.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver or quadrature failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// The reserve price is at or above the value distribution's mean, so no
// interior bidding threshold exists and competitive-profit quantities are
// undefined. Callers that can fall back to the degenerate strategies catch
// this; everything else propagates it.
class DegenerateRegime : public std::runtime_error {
 public:
  explicit DegenerateRegime(const std::string& what) : std::runtime_error(what) {}
};

// A filesystem write failed (unwritable path, missing directory, full disk).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace auctionlab

#endif  // AUCTIONLAB_ERRORS_HPP_
