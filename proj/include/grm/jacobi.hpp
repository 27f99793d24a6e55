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

#include "grm/code.hpp"
#include "grm/polynomial.hpp"

namespace grm {

/// How the brute-force enumeration obtains the outside-T nonzero count.
enum class BruteMode {
  /// n1 = wt(c) - m1 with wt(c) from the weight structure of the code.
  kFast,
  /// Evaluates every codeword at all q^m positions.
  kFullScan,
};

/// Jacobi polynomial of RM_q(1,m) with respect to T, by enumerating all
/// codewords. Accumulation is an OpenMP reduction over codeword indices;
/// threads <= 0 uses the OpenMP default. Works for any T, including empty.
JacobiPolynomial jacobi_brute_force(const GrmCode& code, const PointSet& T, BruteMode mode = BruteMode::kFast,
                                    int threads = 0);

/// Single-threaded reference for jacobi_brute_force.
JacobiPolynomial jacobi_brute_force_serial(const GrmCode& code, const PointSet& T,
                                           BruteMode mode = BruteMode::kFast);

/// Closed-form Jacobi polynomial for the class of T, written out term by
/// term. Throws InputError when t is not 2, 3 or 4, when the class is
/// inconsistent, or when a nonzero term would need a negative exponent.
JacobiPolynomial jacobi_closed_form(const GrmCode& code, const TClass& tclass);

/// Counts over the functionals lambda in V* for a T that contains 0.
///
/// b_ij[i][j] is the number of lambda taking the value j (field index) at
/// exactly i points of T.
struct CountTables {
  std::uint32_t t = 0;
  std::uint32_t q = 0;
  std::vector<std::vector<std::uint64_t>> b_ij;
  std::vector<std::uint64_t> b;
  std::vector<std::int64_t> a;
};

/// b_ij and b by enumeration over V*, a via a_from_b. Throws InputError if
/// T does not contain the origin.
CountTables count_tables(const GrmCode& code, const PointSet& T, int threads = 0);
CountTables count_tables_serial(const GrmCode& code, const PointSet& T);

/// a_i = b_{t-i} - [i = 0] - (q-1)[i = t]. A negative entry throws
/// InternalError.
std::vector<std::int64_t> a_from_b(const std::vector<std::uint64_t>& b, std::uint32_t t, std::uint32_t q);

/// w^t x^(n-t) + sum_i a_i w^(t-i) z^i x^(q^(m-1)-(t-i)) y^((q-1)q^(m-1)-i)
/// + (q-1) z^t y^(n-t), for a T containing the origin.
JacobiPolynomial jacobi_from_a(const std::vector<std::int64_t>& a, std::uint32_t q, std::uint32_t m,
                               std::uint32_t t);

/// Closed-form b_0..b_t for t = 2 and 3 (all classes).
std::vector<BigInt> closed_form_b(const TClass& tclass, std::uint32_t q, std::uint32_t m);

/// Closed-form a_0..a_t for every class with t in {2, 3, 4}.
std::vector<BigInt> closed_form_a(const TClass& tclass, std::uint32_t q, std::uint32_t m);

/// Jacobi polynomial of the dual code:
/// J(w + (q-1)z, w - z, x + (q-1)y, x - y) / code_size, expanded exactly.
/// Throws InputError if some coefficient is not divisible by code_size.
JacobiPolynomial dual_jacobi(const JacobiPolynomial& j, const BigInt& code_size, std::uint32_t q);

/// -q^(m-2)(q-1) x^(q^(m-1)-3) y^((q-1)q^(m-1)-3) (wy - xz)^3, expanded.
/// This is J(T1) - J(T2) for a rank-2 T1 and a rank-1 T2 with |T| = 3.
JacobiPolynomial rank_difference_polynomial(std::uint32_t q, std::uint32_t m);

}  // namespace grm
