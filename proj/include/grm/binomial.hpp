// Copyright 2026 The grmjacobi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "grm/polynomial.hpp"

namespace grm {

// Coefficients of y^l in (x + alpha*y)^A (x - y)^B, alpha >= 0. Three
// routes that must agree; tests hold them against each other.

/// Direct convolution of the two binomial rows, O(A*B).
std::vector<BigInt> binomial_product_convolution(std::uint64_t A, std::uint64_t B, std::uint64_t alpha);

/// Three-term recurrence from (1+ay)(1-y) f' = (Aa(1-y) - B(1+ay)) f, O(A+B).
std::vector<BigInt> binomial_product_recurrence(std::uint64_t A, std::uint64_t B, std::uint64_t alpha);

/// One coefficient, streaming the summand C(A,i) alpha^i C(B,l-i) (-1)^(l-i)
/// over i with O(1) big integers of state. Zero for l > A + B.
BigInt binomial_product_coefficient(std::uint64_t A, std::uint64_t B, std::uint64_t alpha, std::uint64_t l);

/// Walks the coefficients upward from l0 with the recurrence, keeping only
/// the current and previous values. Seeding costs one streamed coefficient
/// pair; each advance is O(size of the numbers).
class BinomialProductStream {
 public:
  BinomialProductStream(std::uint64_t A, std::uint64_t B, std::uint64_t alpha, std::uint64_t l0);

  std::uint64_t l() const { return l_; }
  const BigInt& value() const { return cur_; }
  void advance();

 private:
  long A_, B_, alpha_;
  std::uint64_t l_;
  BigInt prev_, cur_;
};

/// C(n, k) for 0 <= k <= n, else 0.
BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace grm
