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

#include "grm/designs.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "grm/binomial.hpp"
#include "grm/jacobi.hpp"

namespace grm {

std::string DesignReport::verdict() const {
  if (trivial) return "trivial";
  return is_t_design ? "design" : "not-design";
}

namespace {

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

void check_design_args(const GrmCode& code, std::uint64_t ell, std::uint32_t t) {
  if (t < 2 || t > 4) throw InputError("design strength t must be 2, 3 or 4");
  if (code.length() < t) throw InputError("code length smaller than t");
  if (grm_weight_enumerator(code.q(), code.m()).count(ell) == 0) {
    throw InputError("shell of weight " + std::to_string(ell) + " is empty");
  }
}

DesignReport base_report(const GrmCode& code, std::uint64_t ell, std::uint32_t t, std::string method) {
  DesignReport r;
  r.q = code.q();
  r.m = code.m();
  r.ell = ell;
  r.t = t;
  r.method = std::move(method);
  r.shell_size = grm_weight_enumerator(code.q(), code.m()).count(ell).get_ui();
  r.trivial = ell == code.length();
  r.degenerate = ell < t;
  return r;
}

// Per-class observations merged from workers.
struct ClassTally {
  std::map<TClass, std::set<std::uint64_t>> values;
  std::map<TClass, std::uint64_t> subsets;
  std::uint64_t incidence = 0;
  std::uint64_t checked = 0;

  void observe(const TClass& c, std::uint64_t lambda) {
    values[c].insert(lambda);
    ++subsets[c];
    incidence += lambda;
    ++checked;
  }
  void merge(const ClassTally& o) {
    for (const auto& [c, vs] : o.values) values[c].insert(vs.begin(), vs.end());
    for (const auto& [c, n] : o.subsets) subsets[c] += n;
    incidence += o.incidence;
    checked += o.checked;
  }
};

void fill_from_tally(DesignReport& r, const ClassTally& tally) {
  std::set<std::uint64_t> all;
  for (const auto& [c, vs] : tally.values) {
    r.lambda_by_class[c] = BigInt(static_cast<unsigned long>(*vs.begin()));
    if (vs.size() > 1) r.class_conflict = true;
    all.insert(vs.begin(), vs.end());
  }
  for (auto v : all) r.distinct_lambdas.emplace_back(static_cast<unsigned long>(v));
  r.subsets_by_class = tally.subsets;
  r.subsets_checked = tally.checked;
  r.incidence_total = BigInt(static_cast<unsigned long>(tally.incidence));
  r.is_t_design = r.distinct_lambdas.size() == 1;
}

// Visits every t-subset of [lo, n), handing leading indices to OpenMP workers.
template <typename Local, typename Visit, typename Merge>
void parallel_subsets(std::uint64_t lo, std::uint64_t n, std::uint32_t t, int threads, Visit visit, Merge merge) {
  const auto leading = static_cast<std::int64_t>(n > lo ? n - lo : 0);
#pragma omp parallel num_threads(resolve_threads(threads))
  {
    Local local{};
    std::vector<std::uint64_t> idx(t);
#pragma omp for schedule(dynamic)
    for (std::int64_t f = 0; f < leading; ++f) {
      idx[0] = lo + static_cast<std::uint64_t>(f);
      const std::uint64_t rest = idx[0] + 1;
      for_each_subset(n - rest, t - 1, [&](const std::vector<std::uint64_t>& r) {
        for (std::uint32_t j = 0; j + 1 < t; ++j) idx[j + 1] = rest + r[j];
        visit(local, static_cast<const std::vector<std::uint64_t>&>(idx));
      });
    }
#pragma omp critical(grm_subset_merge)
    merge(local);
  }
}

BigInt jacobi_lambda(const JacobiPolynomial& j, std::uint64_t n, std::uint64_t ell, std::uint32_t t) {
  if (ell < t) return 0;
  return j.coefficient(0, t, static_cast<std::int64_t>(n - ell), static_cast<std::int64_t>(ell - t));
}

std::vector<std::vector<std::uint64_t>> shell_supports(const GrmCode& code, std::uint64_t ell) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& c : code.shell(ell)) out.push_back(code.support(c));
  return out;
}

// Sampled t-subsets: sorted, distinct positions, drawn uniformly.
std::vector<std::vector<std::uint64_t>> draw_subsets(std::uint64_t n, std::uint32_t t, std::uint64_t count,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(count);
  while (out.size() < count) {
    std::set<std::uint64_t> s;
    while (s.size() < t) s.insert(pick(rng));
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

void check_budget(double work, double budget) {
  if (work > budget) {
    throw InputError("block counting needs " + std::to_string(work) + " incidence tests, over the budget of " +
                     std::to_string(budget));
  }
}

}  // namespace

std::map<TClass, std::uint64_t> class_census(const GrmCode& code, std::uint32_t t, int threads) {
  using Census = std::map<TClass, std::uint64_t>;
  Census total;
  if (t < 2 || t > 4) throw InputError("census needs t in {2, 3, 4}");
  parallel_subsets<Census>(
      1, code.length(), t - 1, threads,
      [&](Census& local, const std::vector<std::uint64_t>& rest) {
        std::vector<std::uint64_t> idx{0};
        idx.insert(idx.end(), rest.begin(), rest.end());
        ++local[classify_T(code, point_set_from_indices(code, idx))];
      },
      [&](const Census& local) {
        for (const auto& [c, n] : local) total[c] += n;
      });
  return total;
}

std::optional<PointSet> find_class_witness(const GrmCode& code, const TClass& c, std::uint64_t limit) {
  if (c.t < 2 || c.t > 4 || c.t > code.length()) return std::nullopt;
  if (c.rank > std::min(c.t - 1, code.m())) return std::nullopt;
  std::optional<PointSet> found;
  std::uint64_t visited = 0;
  // for_each_subset has no early exit; the limit bounds the work instead.
  std::vector<std::uint64_t> idx(c.t);
  idx[0] = 0;
  const std::uint64_t n = code.length();
  const std::uint32_t k = c.t - 1;
  std::vector<std::uint64_t> r(k);
  for (std::uint32_t i = 0; i < k; ++i) r[i] = i + 1;
  while (visited < limit) {
    ++visited;
    for (std::uint32_t i = 0; i < k; ++i) idx[i + 1] = r[i];
    PointSet T = point_set_from_indices(code, idx);
    if (classify_T(code, T) == c) return T;
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && r[i] == n - k + i) --i;
    if (i < 0) break;
    ++r[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) r[j] = r[j - 1] + 1;
  }
  return found;
}

DesignReport design_check_jacobi(const GrmCode& code, std::uint64_t ell, std::uint32_t t,
                                 const DesignOptions& options) {
  check_design_args(code, ell, t);
  const std::string source = options.source == JacobiSource::kClosedForm ? "closed" : "brute";
  DesignReport r = base_report(code, ell, t,
                               "jacobi-" + source + (options.sweep == SubsetSweep::kAll ? "" : "-representatives"));
  const std::uint64_t n = code.length();

  auto lambda_of = [&](const TClass& c, const PointSet& T) -> BigInt {
    if (options.source == JacobiSource::kClosedForm) return jacobi_lambda(jacobi_closed_form(code, c), n, ell, t);
    return jacobi_lambda(jacobi_brute_force_serial(code, T), n, ell, t);
  };

  ClassTally tally;
  if (options.sweep == SubsetSweep::kRepresentatives) {
    for (const auto& [c, count] : class_census(code, t, options.threads)) {
      auto witness = find_class_witness(code, c, UINT64_MAX);
      if (!witness) throw InternalError("census class " + c.name() + " has no witness");
      tally.values[c].insert(lambda_of(c, *witness).get_ui());
      tally.subsets[c] = count;
      tally.checked += count;
    }
  } else {
    // Closed-form lambdas depend only on the class; cache them.
    std::map<TClass, std::uint64_t> cache;
    if (options.source == JacobiSource::kClosedForm) {
      for (const auto& c : candidate_classes(t, code.m())) {
        try {
          cache[c] = lambda_of(c, PointSet{}).get_ui();
        } catch (const InputError&) {
          // Class cannot occur for this (q, m); classify_T never returns it.
        }
      }
    }
    parallel_subsets<ClassTally>(
        0, n, t, options.threads,
        [&](ClassTally& local, const std::vector<std::uint64_t>& idx) {
          const PointSet T = point_set_from_indices(code, idx);
          const TClass c = classify_T(code, T);
          const std::uint64_t lambda =
              options.source == JacobiSource::kClosedForm ? cache.at(c) : lambda_of(c, T).get_ui();
          local.observe(c, lambda);
        },
        [&](const ClassTally& local) { tally.merge(local); });
  }
  fill_from_tally(r, tally);
  r.incidence_total.reset();
  return r;
}

DesignReport design_check_bruteforce(const GrmCode& code, std::uint64_t ell, std::uint32_t t,
                                     const BlockCountOptions& options) {
  check_design_args(code, ell, t);
  const std::uint64_t n = code.length();
  DesignReport r = base_report(code, ell, t, options.samples ? "block-count-sampled" : "block-count");
  const double subsets = options.samples ? static_cast<double>(*options.samples) : binomial(n, t).get_d();
  check_budget(subsets * static_cast<double>(r.shell_size), options.budget);

  // Transposed incidence: for each position, a bitset over blocks.
  const auto blocks = shell_supports(code, ell);
  const std::size_t words = (blocks.size() + 63) / 64;
  std::vector<std::uint64_t> by_position(n * words, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto pos : blocks[b]) by_position[pos * words + b / 64] |= 1ULL << (b % 64);
  }
  auto count_blocks = [&](const std::vector<std::uint64_t>& idx) {
    std::uint64_t count = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t acc = ~0ULL;
      for (auto pos : idx) acc &= by_position[pos * words + w];
      count += static_cast<std::uint64_t>(std::popcount(acc));
    }
    return count;
  };
  auto visit = [&](ClassTally& local, const std::vector<std::uint64_t>& idx) {
    local.observe(classify_T(code, point_set_from_indices(code, idx)), count_blocks(idx));
  };

  ClassTally tally;
  if (options.samples) {
    const auto drawn = draw_subsets(n, t, *options.samples, options.seed);
    const auto count = static_cast<std::int64_t>(drawn.size());
#pragma omp parallel num_threads(resolve_threads(options.threads))
    {
      ClassTally local;
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < count; ++i) visit(local, drawn[static_cast<std::size_t>(i)]);
#pragma omp critical(grm_sample_merge)
      tally.merge(local);
    }
  } else {
    parallel_subsets<ClassTally>(0, n, t, options.threads, visit,
                                 [&](const ClassTally& local) { tally.merge(local); });
  }
  fill_from_tally(r, tally);
  return r;
}

DesignReport design_check_bruteforce_serial(const GrmCode& code, std::uint64_t ell, std::uint32_t t,
                                            const BlockCountOptions& options) {
  check_design_args(code, ell, t);
  const std::uint64_t n = code.length();
  DesignReport r = base_report(code, ell, t, options.samples ? "block-count-sampled" : "block-count");
  const double subsets = options.samples ? static_cast<double>(*options.samples) : binomial(n, t).get_d();
  check_budget(subsets * static_cast<double>(r.shell_size), options.budget);

  std::vector<std::vector<bool>> blocks;
  for (const auto& support : shell_supports(code, ell)) {
    std::vector<bool> b(n, false);
    for (auto pos : support) b[pos] = true;
    blocks.push_back(std::move(b));
  }
  ClassTally tally;
  auto visit = [&](const std::vector<std::uint64_t>& idx) {
    std::uint64_t count = 0;
    for (const auto& b : blocks) {
      count += std::all_of(idx.begin(), idx.end(), [&](std::uint64_t pos) { return b[pos]; });
    }
    tally.observe(classify_T(code, point_set_from_indices(code, idx)), count);
  };
  if (options.samples) {
    for (const auto& idx : draw_subsets(n, t, *options.samples, options.seed)) visit(idx);
  } else {
    for_each_subset(n, t, visit);
  }
  fill_from_tally(r, tally);
  return r;
}

GeneralizedParams generalized_design_params(const GrmCode& code, std::uint64_t ell, std::uint32_t t) {
  if (ell != code.middle_weight()) throw InputError("generalized parameters are known only for ell = (q-1)q^(m-1)");
  if (t != 3 && t != 4) throw InputError("generalized parameters are known only for t = 3 and t = 4");
  const BigInt q = code.q();
  const std::uint32_t m = code.m();
  auto qp = [&](std::uint32_t e) { return big_pow(code.q(), m - std::min(e, m)); };
  GeneralizedParams g;
  g.v = code.length();
  g.k = ell;
  const auto census = class_census(code, t);
  auto entry = [&](TClass c, BigInt lambda) {
    auto it = census.find(c);
    std::optional<BigInt> value;
    if (c.rank <= m) value = std::move(lambda);
    g.entries.push_back({c, std::move(value), it == census.end() ? 0 : it->second});
  };
  if (t == 3) {
    entry({3, 2, Subcase::kNone}, (q - 1) * (qp(0) - 2 * qp(1) + qp(2) - 1));
    entry({3, 1, Subcase::kNone}, (q - 1) * (qp(0) - 2 * qp(1) - 1));
  } else {
    entry({4, 3, Subcase::kNone}, (q - 1) * (qp(0) - 3 * qp(1) + 3 * qp(2) - qp(3) - 1));
    entry({4, 2, Subcase::kCollinearTriple}, (q - 1) * (qp(0) - 3 * qp(1) + 2 * qp(2) - 1));
    entry({4, 2, Subcase::kGeneric}, (q - 1) * (qp(0) - 3 * qp(1) + 3 * qp(2) - 1));
    entry({4, 1, Subcase::kNone}, (q - 1) * (qp(0) - 3 * qp(1) - 1));
  }
  return g;
}

}  // namespace grm
