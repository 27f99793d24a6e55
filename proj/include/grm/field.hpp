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

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grm {

/// Any violated precondition or malformed input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (a counting or arithmetic bug).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Element of F_q addressed by its base-p digit encoding: index = sum c_i p^i
/// where the element is sum c_i alpha^i and alpha is a root of the modulus.
struct Elem {
  std::uint32_t index = 0;

  constexpr auto operator<=>(const Elem&) const = default;
};

/// The finite field F_q, q = p^k. Immutable after construction.
///
/// For q up to kTableLimit the addition and multiplication tables are
/// precomputed; above that arithmetic goes through the digit representation.
class Field {
 public:
  static constexpr std::uint32_t kTableLimit = 256;

  /// F_{p^k} with the lexicographically least monic irreducible modulus of
  /// degree k (compared as the coefficient list c_0..c_k).
  static Field make(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients c_0..c_k of the monic modulus; {0, 1} for a prime field.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem element(std::uint32_t index) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws InputError for a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  /// All q elements in index order.
  std::vector<Elem> elements() const;

  /// Human-readable polynomial form of an element, e.g. "a+2" or "2a^2+1".
  std::string to_polynomial_string(Elem a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;
  Elem add_slow(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;
  void check(Elem a) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> neg_table_;
};

bool is_prime(std::uint64_t n);

/// If n = p^k for a prime p, returns {p, k}; otherwise {0, 0}.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t n);

/// Checked integer power; throws InputError on 64-bit overflow.
std::uint64_t ipow(std::uint64_t base, std::uint64_t exp);

}  // namespace grm
