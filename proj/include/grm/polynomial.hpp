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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "grm/field.hpp"

namespace grm {

using BigInt = mpz_class;

/// Exponents of w^ew z^ez x^ex y^ey.
struct Monomial {
  std::int64_t w = 0;
  std::int64_t z = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;

  auto operator<=>(const Monomial&) const = default;
  std::string to_string() const;
};

/// Sparse polynomial in (w, z, x, y) homogeneous of degree t in (w, z) and
/// of degree n - t in (x, y). Zero coefficients are never stored.
class JacobiPolynomial {
 public:
  using Terms = std::map<Monomial, BigInt>;

  JacobiPolynomial(std::uint64_t t, std::uint64_t n);

  std::uint64_t t() const { return t_; }
  std::uint64_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Adds c to the coefficient of mono; throws InputError when mono breaks
  /// bi-homogeneity or has a negative exponent.
  void add(const Monomial& mono, const BigInt& c);
  BigInt coefficient(const Monomial& mono) const;
  BigInt coefficient(std::int64_t ew, std::int64_t ez, std::int64_t ex, std::int64_t ey) const {
    return coefficient(Monomial{ew, ez, ex, ey});
  }
  /// Value at w = z = x = y = 1.
  BigInt evaluate_at_ones() const;
  bool is_bihomogeneous() const;

  JacobiPolynomial& operator+=(const JacobiPolynomial& other);
  JacobiPolynomial& operator-=(const JacobiPolynomial& other);
  friend JacobiPolynomial operator-(JacobiPolynomial a, const JacobiPolynomial& b) { return a -= b; }
  friend bool operator==(const JacobiPolynomial&, const JacobiPolynomial&) = default;

  /// e.g. "w^2*x^7 + 2*w^2*x*y^6"; terms in descending monomial order.
  std::string to_string() const;

 private:
  void check_shape(const JacobiPolynomial& other) const;

  std::uint64_t t_;
  std::uint64_t n_;
  Terms terms_;
};

/// Terms of a minus b that differ, as (monomial, a-coefficient, b-coefficient).
struct TermDiff {
  Monomial mono;
  BigInt left;
  BigInt right;
};
std::vector<TermDiff> term_diff(const JacobiPolynomial& a, const JacobiPolynomial& b);

/// Hamming weight enumerator: weight -> number of codewords.
struct WeightEnumerator {
  std::uint64_t n = 0;
  std::map<std::uint64_t, BigInt> counts;

  BigInt count(std::uint64_t weight) const;
  BigInt total() const;
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// Weight enumerator of RM_q(1,m) from its three-term structure.
WeightEnumerator grm_weight_enumerator(std::uint32_t q, std::uint32_t m);

/// The T = empty Jacobi polynomial x^(n-w) y^w corresponding to e.
JacobiPolynomial as_jacobi(const WeightEnumerator& e);
/// Inverse of as_jacobi; throws InputError unless t = 0.
WeightEnumerator as_weight_enumerator(const JacobiPolynomial& j);

BigInt big_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace grm
