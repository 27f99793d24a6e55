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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grm/code.hpp"
#include "grm/polynomial.hpp"

namespace grm {

/// Parameters t-(v, k, (lambda_1..lambda_N)) of a generalized design, with
/// the position-set class each lambda belongs to.
struct GeneralizedParams {
  struct Entry {
    TClass tclass;
    /// Formula value; empty when the class needs a rank above m.
    std::optional<BigInt> lambda;
    /// Number of t-sets containing the origin in this class (0: class empty).
    std::uint64_t census = 0;
  };
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::vector<Entry> entries;
};

/// Verdict for one (shell, t) pair. Blocks are supports counted with
/// multiplicity, so lambda counts codewords.
struct DesignReport {
  std::uint32_t q = 0;
  std::uint32_t m = 0;
  std::uint64_t ell = 0;
  std::uint32_t t = 0;
  std::string method;
  std::uint64_t shell_size = 0;
  /// Every block is the full position set (excluded from design claims).
  bool trivial = false;
  /// Blocks smaller than t: every lambda is 0.
  bool degenerate = false;
  /// Number of t-subsets examined.
  std::uint64_t subsets_checked = 0;
  std::map<TClass, BigInt> lambda_by_class;
  std::map<TClass, std::uint64_t> subsets_by_class;
  /// Distinct lambda values over all examined subsets, ascending.
  std::vector<BigInt> distinct_lambdas;
  /// Some class showed two different lambda values (contradicts the closed forms).
  bool class_conflict = false;
  bool is_t_design = false;
  /// Sum of all per-subset counts (block-counting route only).
  std::optional<BigInt> incidence_total;
  std::optional<GeneralizedParams> generalized;

  /// "trivial", "design" or "not-design".
  std::string verdict() const;
};

enum class SubsetSweep {
  /// Every t-subset of the q^m positions.
  kAll,
  /// One representative per class found by a census of t-sets containing 0.
  kRepresentatives,
};

enum class JacobiSource { kClosedForm, kBruteForce };

struct DesignOptions {
  SubsetSweep sweep = SubsetSweep::kAll;
  JacobiSource source = JacobiSource::kClosedForm;
  int threads = 0;
};

/// Decides the design property from the coefficient of z^t x^(n-ell) y^(ell-t)
/// of J_{C,T}. Throws InputError for an empty shell or t outside {2,3,4}.
DesignReport design_check_jacobi(const GrmCode& code, std::uint64_t ell, std::uint32_t t,
                                 const DesignOptions& options = {});

struct BlockCountOptions {
  /// Maximum C(n,t) * |C_ell| incidence tests before refusing.
  double budget = 4e9;
  /// When set, examine this many uniformly drawn t-subsets instead of all.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0x5eed;
  int threads = 0;
};

/// Counts, for every t-subset of positions, the blocks of the shell that
/// contain it; lambda keyed by the subset's class. Throws InputError for an
/// empty shell or when the work exceeds the budget.
DesignReport design_check_bruteforce(const GrmCode& code, std::uint64_t ell, std::uint32_t t,
                                     const BlockCountOptions& options = {});
DesignReport design_check_bruteforce_serial(const GrmCode& code, std::uint64_t ell, std::uint32_t t,
                                            const BlockCountOptions& options = {});

/// Class of every t-set containing the origin (there are C(n-1, t-1)); by
/// translation every class of t-sets occurs among them.
std::map<TClass, std::uint64_t> class_census(const GrmCode& code, std::uint32_t t, int threads = 0);

/// First t-set containing the origin (in lexicographic order of position
/// indices) whose class is c, searching at most `limit` sets.
std::optional<PointSet> find_class_witness(const GrmCode& code, const TClass& c, std::uint64_t limit = 1'000'000);

/// v = q^m, k = ell and the lambda list for ell = (q-1)q^(m-1), t in {3, 4}:
/// t = 3 lists rank 2 then rank 1; t = 4 lists rank 3, rank 2 collinear,
/// rank 2 generic, rank 1. Census counts come from class_census.
GeneralizedParams generalized_design_params(const GrmCode& code, std::uint64_t ell, std::uint32_t t);

/// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::uint64_t n, std::uint32_t k, F&& f) {
  if (k > n) return;
  std::vector<std::uint64_t> idx(k);
  for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(static_cast<const std::vector<std::uint64_t>&>(idx));
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace grm
