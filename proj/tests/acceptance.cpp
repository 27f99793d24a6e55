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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Reports (without timings) are compared
// between a 1-worker and a 4-worker run for the determinism criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grm/binomial.hpp"
#include "grm/conjecture.hpp"
#include "grm/designs.hpp"
#include "grm/jacobi.hpp"
#include "grm/serialize.hpp"
#include "grm/verify.hpp"

using namespace grm;

namespace {

struct Outcome {
  bool pass = true;
  Json report = Json::object();
  std::string summary;
};

struct Pair {
  std::uint32_t p, k, m;
};
const std::vector<Pair> kPairs{{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {3, 1, 3}, {2, 2, 2}, {5, 1, 2}};

BigInt qp(std::uint32_t q, std::uint32_t e) { return big_pow(q, e); }

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    if (o.pass) o.summary = what;
    o.pass = false;
  }
}

Outcome claims(const std::vector<std::string>& names, const std::vector<Pair>& pairs, int threads) {
  Outcome o;
  VerifyOptions vo;
  vo.threads = threads;
  Json arr = Json::array();
  for (auto [p, k, m] : pairs) {
    const auto code = make_code(p, k, m);
    for (const auto& n : names) {
      const auto r = run_claim(n, code, vo);
      arr.push_back(to_json(r));
      expect(o, r.applicable && r.passed, n + " at q=" + std::to_string(r.q) + " m=" + std::to_string(m));
    }
  }
  o.report["claims"] = arr;
  return o;
}

// 1. Enumerated weight distribution against the three-term formula.
Outcome weight_enumerators(int) {
  Outcome o;
  for (auto [p, k, m] : kPairs) {
    const auto code = make_code(p, k, m);
    const std::uint32_t q = code.q();
    std::map<std::uint64_t, BigInt> counted;
    for (std::uint64_t i = 0; i < code.size(); ++i) counted[code.weight(code.codeword(i))] += 1;
    std::map<std::uint64_t, BigInt> formula{{0, 1},
                                            {(q - 1) * ipow(q, m - 1), qp(q, m + 1) - q},
                                            {ipow(q, m), BigInt(q - 1)}};
    Json row{{"q", q}, {"m", m}};
    for (const auto& [w, c] : counted) row["A_" + std::to_string(w)] = c.get_str();
    o.report["pairs"].push_back(row);
    expect(o, counted == formula, "distribution differs at q=" + std::to_string(q));
  }
  if (o.pass) o.summary = "six distributions match";
  return o;
}

// 2. Brute force against the dispatched closed forms.
Outcome equivalence(int threads) {
  auto o = claims({"jacobi-two-point", "jacobi-three-point", "jacobi-four-point"}, kPairs, threads);
  if (o.pass) {
    std::uint64_t total = 0;
    for (const auto& r : o.report["claims"]) total += r["checked"].get<std::uint64_t>();
    o.summary = std::to_string(total) + " point sets, every size-4 sweep exhaustive";
  }
  return o;
}

// 3. Enumerated counts against the closed-form b and a, plus spot formulas.
Outcome counting(int threads) {
  auto o = claims({"counts-two-point", "counts-three-point", "counts-four-point"}, kPairs, threads);
  for (auto [p, k, m] : kPairs) {
    const auto code = make_code(p, k, m);
    const std::uint64_t q = code.q();
    const auto two = count_tables(code, *find_class_witness(code, {2, 1, Subcase::kNone}), threads);
    expect(o, two.b[0] == ipow(q, m - 1) * (q - 1) * (q - 1), "b_0 for two points");
    if (q >= 3) {
      const auto line = count_tables(code, *find_class_witness(code, {3, 1, Subcase::kNone}), threads);
      expect(o, line.b[2] == 0, "b_2 for a collinear triple");
    }
  }
  if (o.pass) o.summary = "every class at every pair";
  return o;
}

// 4. Nontrivial shells are 2-designs; direct lambda at q=3, m=2, l=6.
Outcome two_designs(int threads) {
  auto o = claims({"two-designs"}, kPairs, threads);
  BlockCountOptions bo;
  bo.threads = threads;
  const auto r = design_check_bruteforce(make_code(3, 1, 2), 6, 2, bo);
  o.report["q3m2l6"] = to_json(r);
  expect(o, r.shell_size == 24 && r.subsets_checked == 36, "q=3,m=2,l=6: block or pair count");
  expect(o, r.is_t_design && r.distinct_lambdas == std::vector<BigInt>{10}, "q=3,m=2,l=6: lambda != 10");
  if (o.pass) o.summary = "lambda = 10 over 24 blocks x 36 pairs at q=3, m=2";
  return o;
}

// 5. Middle shell is not a 3-design; both lambda values by formula.
Outcome not_three_designs(int threads) {
  Outcome o;
  for (auto [p, k, m] : std::vector<Pair>{{3, 1, 2}, {2, 2, 2}, {5, 1, 2}, {3, 1, 3}}) {
    const auto code = make_code(p, k, m);
    const std::uint32_t q = code.q();
    const std::uint64_t ell = code.middle_weight();
    const BigInt l1 = BigInt(q - 1) * (qp(q, m) - 2 * qp(q, m - 1) + qp(q, m - 2) - 1);
    const BigInt l2 = BigInt(q - 1) * (qp(q, m) - 2 * qp(q, m - 1) - 1);
    BlockCountOptions bo;
    bo.threads = threads;
    const auto blocks = design_check_bruteforce(code, ell, 3, bo);
    const auto jac = design_check_jacobi(code, ell, 3, {SubsetSweep::kAll, JacobiSource::kClosedForm, threads});
    const std::string at = " at q=" + std::to_string(q) + " m=" + std::to_string(m);
    expect(o, !blocks.is_t_design && !jac.is_t_design, "3-design" + at);
    expect(o, blocks.lambda_by_class == jac.lambda_by_class, "routes disagree" + at);
    expect(o, blocks.lambda_by_class.at({3, 2, Subcase::kNone}) == l1, "rank-2 lambda" + at);
    expect(o, blocks.lambda_by_class.at({3, 1, Subcase::kNone}) == l2, "rank-1 lambda" + at);
    o.report["pairs"].push_back(Json{{"q", q}, {"m", m}, {"lambda_1", l1.get_str()}, {"lambda_2", l2.get_str()},
                                     {"blocks", to_json(blocks)}});
  }
  if (o.pass) o.summary = "two lambda values, formulas match, routes agree";
  return o;
}

// -q^(m-2)(q-1) x^a y^b (wy - xz)^3, built here independently.
JacobiPolynomial expected_difference(std::uint32_t q, std::uint32_t m) {
  const std::int64_t s = ipow(q, m - 1);
  const std::int64_t a = s - 3, b = (q - 1) * s - 3;
  const BigInt c = -qp(q, m - 2) * (q - 1);
  JacobiPolynomial j(3, ipow(q, m));
  j.add({3, 0, a, b + 3}, c);
  j.add({2, 1, a + 1, b + 2}, -3 * c);
  j.add({1, 2, a + 2, b + 1}, 3 * c);
  j.add({0, 3, a + 3, b}, -c);
  return j;
}

// 6. Difference identity by symbolic expansion.
Outcome difference(int threads) {
  Outcome o;
  for (auto [p, m] : {std::pair{3u, 2u}, {5u, 2u}}) {
    const auto code = make_code(p, 1, m);
    const auto t1 = *find_class_witness(code, {3, 2, Subcase::kNone});
    const auto t2 = *find_class_witness(code, {3, 1, Subcase::kNone});
    const auto d = jacobi_brute_force(code, t1, BruteMode::kFast, threads) - jacobi_brute_force(code, t2, BruteMode::kFast, threads);
    const auto e = expected_difference(code.q(), m);
    expect(o, d == e, "difference at q=" + std::to_string(p));
    expect(o, jacobi_closed_form(code, {3, 2, Subcase::kNone}) - jacobi_closed_form(code, {3, 1, Subcase::kNone}) == e,
           "closed-form difference at q=" + std::to_string(p));
    o.report["pairs"].push_back(Json{{"q", p}, {"m", m}, {"difference", to_json(d)}});
  }
  if (o.pass) o.summary = "exact at q=3 and q=5";
  return o;
}

// 7. Dual transform.
Outcome dual(int threads) {
  auto o = claims({"dual-transform"}, kPairs, threads);
  const auto d = dual_jacobi(as_jacobi(grm_weight_enumerator(2, 2)), 8, 2);
  JacobiPolynomial rep(0, 4);
  rep.add({0, 0, 4, 0}, 1);
  rep.add({0, 0, 0, 4}, 1);
  expect(o, d == rep, "dual of the q=2, m=2 enumerator is not x^4 + y^4");
  o.report["rm22_dual"] = to_json(d);
  if (o.pass) o.summary = "x^4 + y^4; double transform identity; dual sizes";
  return o;
}

// 8. Dual-shell scan at bound 1e7.
Outcome scan(int threads) {
  Outcome o;
  const auto results = conjecture_scan(1e7, threads);
  std::uint64_t confirmed = 0, skipped = 0, counter = 0, below = 0;
  Json bad = Json::array();
  for (const auto& r : results) {
    if (r.q < 3) continue;
    switch (r.verdict) {
      case Verdict::kConfirmed: ++confirmed; break;
      case Verdict::kSkipped: ++skipped; break;
      case Verdict::kCounterexample:
        ++counter;
        bad.push_back(Json{{"q", r.q}, {"m", r.m}, {"l", r.counterexamples}});
        break;
    }
    if (r.verdict == Verdict::kCounterexample && r.confirmed_up_to_n_minus_3) ++below;
  }
  o.report["pairs"] = results.size();
  o.report["confirmed"] = confirmed;
  o.report["skipped"] = skipped;
  o.report["counterexamples"] = bad;

  // Per-l coefficients at (3,2) against the full dual expansion.
  const auto code = make_code(3, 1, 2);
  const auto diff = dual_jacobi(jacobi_closed_form(code, {3, 2, Subcase::kNone}), 27, 3) -
                    dual_jacobi(jacobi_closed_form(code, {3, 1, Subcase::kNone}), 27, 3);
  bool agree = true;
  for (const auto& r : results) {
    if (r.q != 3 || r.m != 2) continue;
    for (const auto& s : r.shells) {
      const auto l = static_cast<std::int64_t>(s.ell);
      agree = agree && s.diff_coefficient == diff.coefficient(0, 3, 9 - l, l - 3);
    }
  }
  o.report["q3m2_matches_expansion"] = agree;
  expect(o, agree, "scan coefficients at q=3, m=2 differ from the dual expansion");
  expect(o, counter == 0 && skipped == 0,
         std::to_string(counter) + " pairs with a zero coefficient on a nonempty nontrivial dual shell (l = n-2, n-1), " +
             std::to_string(skipped) + " m=1 pairs skipped; all " + std::to_string(below) +
             " counterexample pairs are clean for 3 <= l <= n-3");
  if (o.pass) o.summary = std::to_string(confirmed) + " pairs confirmed";
  return o;
}

// Blocks of the shell containing every point of T, counted directly.
BigInt blocks_through(const GrmCode& code, const std::vector<Codeword>& shell, const PointSet& T) {
  BigInt n = 0;
  for (const auto& c : shell) {
    bool all = true;
    for (const auto& u : T) all = all && code.evaluate(c, u) != code.field().zero();
    if (all) n += 1;
  }
  return n;
}

// 9. Four-class lambdas of the middle shell.
Outcome generalized(int threads) {
  Outcome o;
  std::vector<Pair> candidates = kPairs;
  for (auto extra : std::vector<Pair>{{2, 1, 4}, {3, 1, 4}, {2, 2, 3}, {5, 1, 3}}) candidates.push_back(extra);
  std::uint64_t selected = 0;
  for (auto [p, k, m] : candidates) {
    const auto code = make_code(p, k, m);
    const std::uint32_t q = code.q();
    Json row{{"q", q}, {"m", m}};
    const auto census = class_census(code, 4, threads);
    bool eligible = m >= 3 && census.size() == 4;
    std::map<TClass, BigInt> formula;
    if (m >= 3) {
      const BigInt c = q - 1;
      formula[{4, 3, Subcase::kNone}] = c * (qp(q, m) - 3 * qp(q, m - 1) + 3 * qp(q, m - 2) - qp(q, m - 3) - 1);
      formula[{4, 2, Subcase::kCollinearTriple}] = c * (qp(q, m) - 3 * qp(q, m - 1) + 2 * qp(q, m - 2) - 1);
      formula[{4, 2, Subcase::kGeneric}] = c * (qp(q, m) - 3 * qp(q, m - 1) + 3 * qp(q, m - 2) - 1);
      formula[{4, 1, Subcase::kNone}] = c * (qp(q, m) - 3 * qp(q, m - 1) - 1);
      for (const auto& [tc, v] : formula) eligible = eligible && v >= 0;
    }
    Json cj = Json::object();
    for (const auto& [tc, n] : census) cj[tc.name()] = n;
    row["census"] = cj;
    row["eligible"] = eligible;
    if (eligible) {
      ++selected;
      const std::uint64_t ell = code.middle_weight();
      BlockCountOptions bo;
      bo.threads = threads;
      if (binomial(code.length(), 4) > 1000000) bo.samples = 10000;
      const auto r = design_check_bruteforce(code, ell, 4, bo);
      row["block_count"] = to_json(r);
      for (const auto& [tc, v] : formula) {
        const std::string at = tc.name() + " at q=" + std::to_string(q) + " m=" + std::to_string(m);
        auto it = r.lambda_by_class.find(tc);
        if (it != r.lambda_by_class.end()) expect(o, it->second == v, "sampled lambda " + at);
        // Every class also gets one direct count at its census witness.
        const auto w = find_class_witness(code, tc, UINT64_MAX);
        const auto direct = blocks_through(code, code.shell(ell), *w);
        row["witness_lambda"][tc.name()] = direct.get_str();
        expect(o, direct == v, "witness lambda " + at);
      }
      expect(o, !r.class_conflict, "class conflict");
    }
    o.report["pairs"].push_back(row);
  }
  expect(o, selected > 0, "no eligible pair");
  if (o.pass) o.summary = std::to_string(selected) + " eligible pairs, all four lambdas match";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome(int)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "weight enumerator", 1.0, weight_enumerators},
      {2, "brute force equals closed forms", 600.0, equivalence},
      {3, "counting tables", 0, counting},
      {4, "shells are 2-designs", 0, two_designs},
      {5, "middle shell not a 3-design", 0, not_three_designs},
      {6, "difference identity", 0, difference},
      {7, "dual transform", 0, dual},
      {8, "dual-shell 3-design scan, bound 1e7", 900.0, scan},
      {9, "four-class lambdas of the middle shell", 0, generalized},
  };
  bool all = true;
  std::vector<std::string> first;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(1);
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s > c.limit_s) {
      o.pass = false;
      o.summary += " (too slow)";
    }
    all = all && o.pass;
    first.push_back(o.report.dump());
    std::printf("%s criterion %d: %s [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), s, o.summary.c_str());
    std::fflush(stdout);
  }

  // 10. Same reports with four workers.
  std::vector<int> differing;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string again;
    try {
      again = criteria[i].run(4).report.dump();
    } catch (const std::exception& e) {
      again = e.what();
    }
    if (again != first[i]) differing.push_back(criteria[i].id);
  }
  std::string note = "reports of criteria 1-9 byte-identical with 1 and 4 workers";
  if (!differing.empty()) {
    note = "reports differ for criteria";
    for (int d : differing) note += " " + std::to_string(d);
  }
  std::printf("%s criterion 10: determinism %s\n", differing.empty() ? "PASS" : "FAIL", note.c_str());
  all = all && differing.empty();
  return all ? 0 : 1;
}
