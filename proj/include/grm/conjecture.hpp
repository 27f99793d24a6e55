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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grm/polynomial.hpp"

namespace grm {

/// Weight enumerator of the dual of RM_q(1,m): the dual transform of its
/// three-term enumerator, expanded by the binomial recurrence.
WeightEnumerator dual_weight_enumerator(std::uint32_t q, std::uint32_t m);

/// Coefficient of z^3 x^(q^m - ell) y^(ell - 3) in
/// (q-1)(x+(q-1)y)^(q^(m-1)-3) (x-y)^((q-1)q^(m-1)-3) (wy-xz)^3,
/// i.e. J_{dual,T1} - J_{dual,T2} for rank-2 T1 and rank-1 T2.
/// Throws InputError for ell outside [3, q^m] or when q^(m-1) < 3.
BigInt dual_diff_coefficient(std::uint32_t q, std::uint32_t m, std::uint64_t ell);

struct ShellCheck {
  std::uint64_t ell = 0;
  BigInt dual_count;
  BigInt diff_coefficient;
  /// Full-weight shell: every block is the whole position set.
  bool trivial = false;
};

enum class Verdict { kConfirmed, kCounterexample, kSkipped };
std::string to_string(Verdict v);

struct ScanResult {
  std::uint32_t q = 0;
  std::uint32_t m = 0;
  Verdict verdict = Verdict::kSkipped;
  std::string reason;
  /// Every nonempty dual shell with ell >= 3; left empty (shells_omitted)
  /// when q^m exceeds the detail limit, the numbers being huge.
  std::vector<ShellCheck> shells;
  bool shells_omitted = false;
  /// Nontrivial nonempty shells whose difference coefficient is zero.
  std::vector<std::uint64_t> counterexamples;
  /// All nonempty shells with 3 <= ell <= q^m - 3 have a nonzero coefficient.
  bool confirmed_up_to_n_minus_3 = false;
};

/// Per-shell detail is kept only for q^m up to this length.
inline constexpr std::uint64_t kShellDetailLimit = 4096;

/// Checks one (q, m). A nonzero coefficient at a nonempty shell proves that
/// shell is not a 3-design; the verdict is CONFIRMED when this holds for
/// every nontrivial nonempty shell with ell >= 3. Pairs where a rank-2 or a
/// rank-1 three-point set cannot exist are SKIPPED. The weights are split
/// into contiguous ranges, one per OpenMP worker; each range is seeded by
/// streamed sums and walked with the three-term recurrence.
ScanResult scan_pair(std::uint32_t q, std::uint32_t m, int threads = 0,
                     std::uint64_t detail_limit = kShellDetailLimit);
/// One range walked from ell = 3.
ScanResult scan_pair_serial(std::uint32_t q, std::uint32_t m, std::uint64_t detail_limit = kShellDetailLimit);

/// All (q, m) with q >= 3 a prime power, m >= 1 and q^(2m) < bound, ordered by
/// (q, m).
std::vector<std::pair<std::uint32_t, std::uint32_t>> scan_pairs(double bound);

/// scan_pair over scan_pairs(bound); pairs are distributed over workers and
/// results returned in (q, m) order. Throws InputError for bound < 81.
std::vector<ScanResult> conjecture_scan(double bound, int threads = 0,
                                        std::uint64_t detail_limit = kShellDetailLimit);

}  // namespace grm
