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

#include <doctest.h>

#include "grm/binomial.hpp"
#include "grm/designs.hpp"

using namespace grm;

namespace {
TClass cls(const char* name) { return *parse_tclass(name); }
}  // namespace

TEST_CASE("middle shell at q=3, m=2 is a 2-design with lambda 10") {
  const auto code = make_code(3, 1, 2);
  const auto blocks = design_check_bruteforce_serial(code, 6, 2);
  CHECK(blocks.shell_size == 24);
  CHECK(blocks.subsets_checked == 36);
  CHECK(blocks.is_t_design);
  CHECK(blocks.distinct_lambdas == std::vector<BigInt>{10});
  CHECK(*blocks.incidence_total == BigInt(24 * 15));
  const auto jac = design_check_jacobi(code, 6, 2);
  CHECK(jac.is_t_design);
  CHECK(jac.lambda_by_class == blocks.lambda_by_class);
}

TEST_CASE("middle shell at q=3, m=2 is not a 3-design") {
  const auto code = make_code(3, 1, 2);
  const auto r = design_check_bruteforce(code, 6, 3);
  CHECK_FALSE(r.is_t_design);
  CHECK(r.verdict() == "not-design");
  CHECK(r.lambda_by_class.at(cls("t3-rank2")) == 6);
  CHECK(r.lambda_by_class.at(cls("t3-rank1")) == 4);
  const auto g = generalized_design_params(code, 6, 3);
  CHECK(g.entries.size() == 2);
  CHECK(*g.entries[0].lambda == 6);
  CHECK(*g.entries[1].lambda == 4);
}

TEST_CASE("full-weight shell is flagged trivial") {
  const auto code = make_code(3, 1, 2);
  const auto r = design_check_jacobi(code, 9, 2);
  CHECK(r.trivial);
  CHECK(r.verdict() == "trivial");
  CHECK(design_check_bruteforce(code, 9, 2).trivial);
}

TEST_CASE("bad design requests") {
  const auto code = make_code(3, 1, 2);
  CHECK_THROWS_AS(design_check_jacobi(code, 5, 2), InputError);
  CHECK_THROWS_AS(design_check_jacobi(code, 6, 5), InputError);
  BlockCountOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(design_check_bruteforce(code, 6, 3, tiny), InputError);
  CHECK_THROWS_AS(generalized_design_params(code, 9, 3), InputError);
}

TEST_CASE("block counting: parallel matches serial") {
  const auto code = make_code(2, 2, 2);
  for (std::uint32_t t = 2; t <= 4; ++t) {
    const auto s = design_check_bruteforce_serial(code, 12, t);
    for (int threads : {1, 2, 4}) {
      BlockCountOptions o;
      o.threads = threads;
      const auto p = design_check_bruteforce(code, 12, t, o);
      CHECK(p.lambda_by_class == s.lambda_by_class);
      CHECK(p.subsets_by_class == s.subsets_by_class);
      CHECK(p.incidence_total == s.incidence_total);
    }
  }
}

TEST_CASE("sampled block counts are reproducible") {
  const auto code = make_code(3, 1, 3);
  BlockCountOptions o;
  o.samples = 500;
  o.threads = 1;
  const auto a = design_check_bruteforce(code, 18, 4, o);
  o.threads = 4;
  const auto b = design_check_bruteforce(code, 18, 4, o);
  CHECK(a.subsets_checked == 500);
  CHECK(a.lambda_by_class == b.lambda_by_class);
  CHECK(a.subsets_by_class == b.subsets_by_class);
}

TEST_CASE("representative sweep matches the full sweep") {
  const auto code = make_code(3, 1, 3);
  const auto full = design_check_jacobi(code, 18, 3);
  const auto reps = design_check_jacobi(code, 18, 3, {SubsetSweep::kRepresentatives, JacobiSource::kBruteForce, 0});
  CHECK(full.lambda_by_class == reps.lambda_by_class);
  CHECK(full.is_t_design == reps.is_t_design);
}

TEST_CASE("class census") {
  const auto code = make_code(3, 1, 3);
  for (std::uint32_t t = 2; t <= 4; ++t) {
    std::uint64_t total = 0;
    for (const auto& [c, n] : class_census(code, t)) total += n;
    CHECK(BigInt(static_cast<unsigned long>(total)) == binomial(code.length() - 1, t - 1));
  }
  CHECK(class_census(code, 3, 1) == class_census(code, 3, 4));
  CHECK_FALSE(find_class_witness(make_code(3, 1, 2), cls("t4-rank3")));
  CHECK_FALSE(find_class_witness(make_code(2, 1, 3), cls("t4-rank2-collinear")));
  CHECK(find_class_witness(make_code(2, 1, 3), cls("t4-rank2-generic")));
}

TEST_CASE("subset enumeration order") {
  std::vector<std::vector<std::uint64_t>> seen;
  for_each_subset(4, 2, [&](const std::vector<std::uint64_t>& s) { seen.push_back(s); });
  CHECK(seen.size() == 6);
  CHECK(seen.front() == std::vector<std::uint64_t>{0, 1});
  CHECK(seen.back() == std::vector<std::uint64_t>{2, 3});
  int zero = 0;
  for_each_subset(3, 0, [&](const std::vector<std::uint64_t>&) { ++zero; });
  CHECK(zero == 1);
}
