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

#include "grm/conjecture.hpp"

#include <omp.h>

#include "grm/binomial.hpp"
#include "grm/code.hpp"
#include "grm/designs.hpp"

namespace grm {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed:
      return "CONFIRMED";
    case Verdict::kCounterexample:
      return "COUNTEREXAMPLE";
    case Verdict::kSkipped:
      return "SKIPPED";
  }
  return "?";
}

WeightEnumerator dual_weight_enumerator(std::uint32_t q, std::uint32_t m) {
  if (prime_power(q).first == 0) throw InputError(std::to_string(q) + " is not a prime power");
  if (m < 1) throw InputError("dimension m must be >= 1");
  const std::uint64_t n = ipow(q, m);
  const std::uint64_t zeros = n / q;
  const BigInt code_size = big_pow(q, m + 1ULL);
  const auto full = binomial_product_recurrence(n, 0, q - 1);
  const auto middle = binomial_product_recurrence(zeros, n - zeros, q - 1);
  const auto empty = binomial_product_recurrence(0, n, q - 1);
  const BigInt middle_count = code_size - q;
  WeightEnumerator e;
  e.n = n;
  for (std::uint64_t l = 0; l <= n; ++l) {
    BigInt c = full[l] + middle_count * middle[l] + (q - 1) * empty[l];
    if (!mpz_divisible_p(c.get_mpz_t(), code_size.get_mpz_t())) {
      throw InternalError("dual weight enumerator: inexact division at weight " + std::to_string(l));
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), code_size.get_mpz_t());
    if (c < 0) throw InternalError("dual weight enumerator: negative count at weight " + std::to_string(l));
    if (c != 0) e.counts[l] = std::move(c);
  }
  return e;
}

BigInt dual_diff_coefficient(std::uint32_t q, std::uint32_t m, std::uint64_t ell) {
  if (m < 1) throw InputError("dimension m must be >= 1");
  const std::uint64_t n = ipow(q, m);
  const std::uint64_t zeros = n / q;
  if (ell < 3 || ell > n) throw InputError("weight " + std::to_string(ell) + " outside [3, q^m]");
  if (zeros < 3) throw InputError("q^(m-1) < 3: the difference polynomial is not defined");
  // Only the (-xz)^3 stratum of (wy - xz)^3 carries z^3.
  const BigInt conv = binomial_product_coefficient(zeros - 3, n - zeros - 3, q - 1, ell - 3);
  return -BigInt(q - 1) * conv;
}

namespace {

// Why the difference test cannot run at (q, m), or empty when it can.
std::string applicability(std::uint32_t q, std::uint32_t m) {
  if (q < 3) return "q < 3: outside the hypothesis q >= 3";
  bool has_rank2 = false;
  for (const auto& c : candidate_classes(3, m)) has_rank2 |= c.rank == 2;
  if (!has_rank2) return "m = 1: every 3-subset of V has affine rank 1, so no rank-2/rank-1 pair exists";
  const auto [p, k] = prime_power(q);
  const GrmCode code(Field::make(p, k), m);
  if (!find_class_witness(code, {3, 2, Subcase::kNone}, 100000)) return "no rank-2 three-point set found";
  if (!find_class_witness(code, {3, 1, Subcase::kNone}, 100000)) return "no rank-1 three-point set found";
  if (code.length() / q < 3) return "q^(m-1) < 3: the difference polynomial is not defined";
  return {};
}

// Shells in [lo, hi): dual counts from the three enumerator terms, the
// difference coefficient from the z^3 stratum. Only nonempty shells are kept.
struct RangeOut {
  std::vector<ShellCheck> shells;
  /// Nonempty shells with a zero coefficient.
  std::vector<std::uint64_t> zeros;
};

RangeOut walk_range(std::uint32_t q, std::uint32_t m, std::uint64_t lo, std::uint64_t hi, bool detail) {
  RangeOut out;
  if (lo >= hi) return out;
  const std::uint64_t n = ipow(q, m);
  const std::uint64_t s = n / q;
  const BigInt code_size = big_pow(q, m + 1ULL);
  const BigInt middle_count = code_size - q;
  BinomialProductStream full(n, 0, q - 1, lo), middle(s, n - s, q - 1, lo), empty(0, n, q - 1, lo);
  BinomialProductStream diff(s - 3, n - s - 3, q - 1, lo - 3);
  BigInt count;
  for (std::uint64_t ell = lo; ell < hi; ++ell) {
    count = full.value() + middle_count * middle.value() + (q - 1) * empty.value();
    if (!mpz_divisible_p(count.get_mpz_t(), code_size.get_mpz_t())) {
      throw InternalError("dual weight enumerator: inexact division at weight " + std::to_string(ell));
    }
    mpz_divexact(count.get_mpz_t(), count.get_mpz_t(), code_size.get_mpz_t());
    if (count < 0) throw InternalError("dual weight enumerator: negative count at weight " + std::to_string(ell));
    if (count != 0) {
      const bool zero = diff.value() == 0;
      if (zero) out.zeros.push_back(ell);
      if (detail) out.shells.push_back({ell, count, -BigInt(q - 1) * diff.value(), ell == n});
    }
    if (ell + 1 < hi) {
      full.advance();
      middle.advance();
      empty.advance();
      diff.advance();
    }
  }
  return out;
}

ScanResult scan_impl(std::uint32_t q, std::uint32_t m, int ranges, std::uint64_t detail_limit) {
  ScanResult r;
  r.q = q;
  r.m = m;
  if (prime_power(q).first == 0) throw InputError(std::to_string(q) + " is not a prime power");
  r.reason = applicability(q, m);
  if (!r.reason.empty()) {
    r.verdict = Verdict::kSkipped;
    return r;
  }
  const std::uint64_t n = ipow(q, m);
  const bool detail = n <= detail_limit;
  r.shells_omitted = !detail;

  // Weights 3..n in `ranges` contiguous pieces; results concatenate in order.
  const std::uint64_t total = n - 2;
  const auto pieces = static_cast<std::uint64_t>(std::max(1, ranges));
  std::vector<RangeOut> outs(pieces);
  const auto count = static_cast<std::int64_t>(pieces);
#pragma omp parallel for schedule(static, 1) num_threads(ranges)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto u = static_cast<std::uint64_t>(i);
    outs[u] = walk_range(q, m, 3 + total * u / pieces, 3 + total * (u + 1) / pieces, detail);
  }
  std::vector<std::uint64_t> zeros;
  for (auto& o : outs) {
    for (auto& s : o.shells) r.shells.push_back(std::move(s));
    zeros.insert(zeros.end(), o.zeros.begin(), o.zeros.end());
  }

  r.confirmed_up_to_n_minus_3 = true;
  for (auto ell : zeros) {
    if (ell + 3 <= n) r.confirmed_up_to_n_minus_3 = false;
    if (ell != n) r.counterexamples.push_back(ell);
  }
  r.verdict = r.counterexamples.empty() ? Verdict::kConfirmed : Verdict::kCounterexample;
  if (!r.counterexamples.empty()) {
    r.reason = "nonempty dual shell of weight " + std::to_string(r.counterexamples.front()) +
               " has zero difference coefficient";
  }
  return r;
}

}  // namespace

ScanResult scan_pair(std::uint32_t q, std::uint32_t m, int threads, std::uint64_t detail_limit) {
  return scan_impl(q, m, threads > 0 ? threads : omp_get_max_threads(), detail_limit);
}

ScanResult scan_pair_serial(std::uint32_t q, std::uint32_t m, std::uint64_t detail_limit) {
  return scan_impl(q, m, 1, detail_limit);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> scan_pairs(double bound) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint64_t q = 3; static_cast<double>(q) * static_cast<double>(q) < bound; ++q) {
    if (prime_power(q).first == 0) continue;
    double q2m = static_cast<double>(q) * static_cast<double>(q);
    for (std::uint32_t m = 1; q2m < bound; ++m, q2m *= static_cast<double>(q) * static_cast<double>(q)) {
      out.emplace_back(static_cast<std::uint32_t>(q), m);
    }
  }
  return out;
}

std::vector<ScanResult> conjecture_scan(double bound, int threads, std::uint64_t detail_limit) {
  if (!(bound >= 81)) throw InputError("scan bound must be >= 81");
  const auto pairs = scan_pairs(bound);
  std::vector<ScanResult> results(pairs.size());
  const auto count = static_cast<std::int64_t>(pairs.size());
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto [q, m] = pairs[static_cast<std::size_t>(i)];
    results[static_cast<std::size_t>(i)] = scan_impl(q, m, 1, detail_limit);
  }
  return results;
}

}  // namespace grm
