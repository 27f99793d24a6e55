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

#include "grm/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>

#include "grm/binomial.hpp"
#include "grm/conjecture.hpp"
#include "grm/designs.hpp"
#include "grm/jacobi.hpp"

namespace grm {

Json to_json(const ClaimResult& r) {
  Json out{{"claim", r.claim},   {"q", r.q},          {"m", r.m},
           {"status", !r.applicable ? "N/A" : (r.passed ? "PASS" : "FAIL")},
           {"checked", r.checked}, {"note", r.note}};
  out["counterexample"] = r.counterexample;
  return out;
}

std::vector<std::array<std::uint32_t, 3>> default_verify_set() {
  return {{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {3, 1, 3}, {2, 2, 2}, {5, 1, 2}};
}

namespace {

using Indices = std::vector<std::uint64_t>;

Json points_json(const PointSet& T) {
  Json a = Json::array();
  for (const auto& u : T) a.push_back(format_point(u));
  return a;
}

Json diff_json(const JacobiPolynomial& a, const JacobiPolynomial& b) {
  Json d = Json::array();
  for (const auto& td : term_diff(a, b)) d.push_back(to_json(td));
  return d;
}

// t-subsets to examine: all of them when affordable, otherwise uniform
// samples plus one census witness per class.
std::vector<Indices> subsets_for(const GrmCode& code, std::uint32_t t, const VerifyOptions& o, std::string& note) {
  std::vector<Indices> out;
  const std::uint64_t n = code.length();
  if (binomial(n, t).get_d() <= o.exhaustive_limit) {
    for_each_subset(n, t, [&](const Indices& idx) { out.push_back(idx); });
    note = "all " + std::to_string(out.size()) + " subsets of size " + std::to_string(t);
    return out;
  }
  std::mt19937_64 rng(o.seed + t);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  while (out.size() < o.samples) {
    std::set<std::uint64_t> s;
    while (s.size() < t) s.insert(pick(rng));
    out.emplace_back(s.begin(), s.end());
  }
  for (const auto& [c, count] : class_census(code, t, o.threads)) {
    const auto w = find_class_witness(code, c, UINT64_MAX);
    Indices idx;
    for (const auto& u : *w) idx.push_back(code.point_index(u));
    out.push_back(idx);
  }
  note = std::to_string(o.samples) + " sampled subsets of size " + std::to_string(t) + " plus one per census class";
  return out;
}

// Every t-set containing the origin.
std::vector<PointSet> origin_sets(const GrmCode& code, std::uint32_t t) {
  std::vector<PointSet> out;
  for_each_subset(code.length() - 1, t - 1, [&](const Indices& r) {
    Indices idx{0};
    for (auto i : r) idx.push_back(i + 1);
    out.push_back(point_set_from_indices(code, idx));
  });
  return out;
}

void fail(ClaimResult& r, Json payload) {
  if (r.passed) r.counterexample = std::move(payload);
  r.passed = false;
}

ClaimResult claim_weight_enumerator(const GrmCode& code, const VerifyOptions&) {
  ClaimResult r;
  WeightEnumerator e;
  e.n = code.length();
  for (std::uint64_t i = 0; i < code.size(); ++i) {
    e.counts[code.weight(code.codeword(i))] += 1;
    ++r.checked;
  }
  const auto expected = grm_weight_enumerator(code.q(), code.m());
  if (!(e == expected)) fail(r, Json{{"enumerated", to_json(e)}, {"expected", to_json(expected)}});
  r.note = "full-scan weights of all codewords";
  return r;
}

ClaimResult closed_form_equivalence(const GrmCode& code, std::uint32_t t, const VerifyOptions& o) {
  ClaimResult r;
  if (code.length() < t) {
    r.applicable = false;
    r.note = "code shorter than t";
    return r;
  }
  std::map<TClass, JacobiPolynomial> closed;
  for (const auto& idx : subsets_for(code, t, o, r.note)) {
    const PointSet T = point_set_from_indices(code, idx);
    const TClass c = classify_T(code, T);
    auto it = closed.find(c);
    if (it == closed.end()) it = closed.emplace(c, jacobi_closed_form(code, c)).first;
    const auto brute = jacobi_brute_force_serial(code, T);
    ++r.checked;
    if (!(brute == it->second)) {
      fail(r, Json{{"T", points_json(T)}, {"class", c.name()}, {"diff", diff_json(brute, it->second)}});
    }
  }
  return r;
}

ClaimResult counts_claim(const GrmCode& code, std::uint32_t t, const VerifyOptions& o) {
  ClaimResult r;
  if (code.length() < t) {
    r.applicable = false;
    return r;
  }
  std::set<std::string> seen;
  for (const auto& T : origin_sets(code, t)) {
    const TClass c = classify_T(code, T);
    seen.insert(c.name());
    const auto tables = count_tables(code, T, o.threads);
    const auto b = closed_form_b(c, code.q(), code.m());
    const auto a = closed_form_a(c, code.q(), code.m());
    ++r.checked;
    for (std::uint32_t i = 0; i <= t; ++i) {
      if (b[i] != BigInt(static_cast<unsigned long>(tables.b[i])) || a[i] != BigInt(static_cast<long>(tables.a[i]))) {
        Json eb = Json::array(), ea = Json::array(), gb = Json::array(), ga = Json::array();
        for (std::uint32_t k = 0; k <= t; ++k) {
          eb.push_back(b[k].get_str());
          ea.push_back(a[k].get_str());
          gb.push_back(tables.b[k]);
          ga.push_back(tables.a[k]);
        }
        fail(r, Json{{"T", points_json(T)}, {"class", c.name()}, {"b_expected", eb}, {"b_counted", gb},
                     {"a_expected", ea}, {"a_counted", ga}});
        break;
      }
    }
  }
  r.note = "all " + std::to_string(r.checked) + " sets through the origin; classes:";
  for (const auto& s : seen) r.note += " " + s;
  return r;
}

ClaimResult claim_b_to_a(const GrmCode& code, const VerifyOptions& o) {
  ClaimResult r;
  for (std::uint32_t t = 1; t <= 4 && t <= code.length(); ++t) {
    auto sets = origin_sets(code, t);
    if (sets.size() > o.samples) sets.resize(o.samples);
    for (const auto& T : sets) {
      const auto tables = count_tables(code, T, o.threads);
      const auto assembled = jacobi_from_a(tables.a, code.q(), code.m(), t);
      const auto brute = jacobi_brute_force_serial(code, T);
      ++r.checked;
      if (!(assembled == brute)) fail(r, Json{{"T", points_json(T)}, {"diff", diff_json(assembled, brute)}});
    }
  }
  r.note = "count tables -> a -> polynomial against brute force, |T| = 1..4";
  return r;
}

ClaimResult claim_translation(const GrmCode& code, const VerifyOptions& o) {
  ClaimResult r;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, code.length() - 1);
  const auto all = code.points();
  for (std::uint32_t t = 0; t <= 4 && t <= code.length(); ++t) {
    for (int rep = 0; rep < 3; ++rep) {
      std::set<std::uint64_t> s;
      while (s.size() < t) s.insert(pick(rng));
      const PointSet T = point_set_from_indices(code, Indices(s.begin(), s.end()));
      const auto base = jacobi_brute_force(code, T, BruteMode::kFast, o.threads);
      for (const auto& v : all) {
        const PointSet shifted = translate_T(code, T, v);
        ++r.checked;
        const auto j = jacobi_brute_force(code, shifted, BruteMode::kFast, o.threads);
        if (!(j == base)) fail(r, Json{{"T", points_json(T)}, {"v", format_point(v)}, {"diff", diff_json(j, base)}});
      }
    }
  }
  r.note = "random T of sizes 0..4 against every translate";
  return r;
}

ClaimResult claim_classification(const GrmCode& code, const VerifyOptions& o) {
  ClaimResult r;
  const auto all = code.points();
  for (std::uint32_t t = 2; t <= 4 && t <= code.length(); ++t) {
    // One census witness per class plus a few lexicographically early sets.
    std::vector<PointSet> sets;
    for (const auto& [c, count] : class_census(code, t, o.threads)) sets.push_back(*find_class_witness(code, c, UINT64_MAX));
    for (const auto& T : sets) {
      const TClass c = classify_T(code, T);
      std::vector<Point> pts = T.points();
      std::vector<std::size_t> perm(pts.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      do {
        std::vector<Point> reordered;
        for (auto i : perm) reordered.push_back(pts[i]);
        const PointSet R(code, reordered);
        for (const auto& v : all) {
          ++r.checked;
          const TClass moved = classify_T(code, translate_T(code, R, v));
          if (!(moved == c)) fail(r, Json{{"T", points_json(T)}, {"v", format_point(v)}, {"expected", c.name()}, {"got", moved.name()}});
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  r.note = "every class witness under all reorderings and translations";
  return r;
}

std::vector<std::uint64_t> shells_of(const GrmCode& code) {
  std::vector<std::uint64_t> out;
  for (const auto& [w, c] : grm_weight_enumerator(code.q(), code.m()).counts) out.push_back(w);
  return out;
}

bool reports_agree(const DesignReport& a, const DesignReport& b) {
  return a.is_t_design == b.is_t_design && a.lambda_by_class == b.lambda_by_class &&
         a.subsets_by_class == b.subsets_by_class && a.distinct_lambdas == b.distinct_lambdas && !a.class_conflict &&
         !b.class_conflict;
}

ClaimResult claim_design_criterion(const GrmCode& code, const VerifyOptions& o) {
  ClaimResult r;
  for (auto ell : shells_of(code)) {
    for (std::uint32_t t = 2; t <= 4 && t <= code.length(); ++t) {
      const double work = binomial(code.length(), t).get_d() *
                          grm_weight_enumerator(code.q(), code.m()).count(ell).get_d();
      if (work > o.block_budget || binomial(code.length(), t).get_d() > o.exhaustive_limit) continue;
      const auto jac = design_check_jacobi(code, ell, t, {SubsetSweep::kAll, JacobiSource::kClosedForm, o.threads});
      BlockCountOptions bo;
      bo.budget = o.block_budget;
      bo.threads = o.threads;
      const auto blocks = design_check_bruteforce(code, ell, t, bo);
      ++r.checked;
      if (!reports_agree(jac, blocks)) fail(r, Json{{"jacobi", to_json(jac)}, {"blocks", to_json(blocks)}});
      if (blocks.incidence_total != binomial(ell, t) * blocks.shell_size) {
        fail(r, Json{{"double_counting", to_json(blocks)}});
      }
    }
  }
  r.note = "Jacobi coefficients against block counts, every shell, t = 2..4 within budget";
  return r;
}

ClaimResult claim_two_designs(const GrmCode& code, const VerifyOptions& o) {
  ClaimResult r;
  for (auto ell : shells_of(code)) {
    if (ell < 2 || ell == code.length()) continue;
    const auto jac = design_check_jacobi(code, ell, 2, {SubsetSweep::kAll, JacobiSource::kClosedForm, o.threads});
    BlockCountOptions bo;
    bo.threads = o.threads;
    const auto blocks = design_check_bruteforce(code, ell, 2, bo);
    ++r.checked;
    if (!jac.is_t_design || !blocks.is_t_design || !reports_agree(jac, blocks)) {
      fail(r, Json{{"jacobi", to_json(jac)}, {"blocks", to_json(blocks)}});
    }
  }
  // Dual shells: one class of 2-sets, so the dual Jacobi polynomial is T-independent.
  const auto cls = candidate_classes(2, code.m());
  if (cls.size() != 1) fail(r, Json{{"two_point_classes", cls.size()}});
  r.note = "nonempty nontrivial shells by both checkers; dual shells via the single 2-set class";
  return r;
}

ClaimResult claim_not_three_designs(const GrmCode& code, const VerifyOptions& o) {
  ClaimResult r;
  if (code.q() < 3 || code.m() < 2) {
    r.applicable = false;
    r.note = "needs q >= 3 and m >= 2";
    return r;
  }
  for (auto ell : shells_of(code)) {
    if (ell < 3 || ell == code.length()) continue;
    const auto jac = design_check_jacobi(code, ell, 3, {SubsetSweep::kAll, JacobiSource::kClosedForm, o.threads});
    BlockCountOptions bo;
    bo.threads = o.threads;
    const auto blocks = design_check_bruteforce(code, ell, 3, bo);
    ++r.checked;
    if (jac.is_t_design || blocks.is_t_design || !reports_agree(jac, blocks)) {
      fail(r, Json{{"jacobi", to_json(jac)}, {"blocks", to_json(blocks)}});
    }
  }
  r.note = "every nonempty nontrivial shell has two lambda values for t = 3";
  return r;
}

ClaimResult claim_generalized(const GrmCode& code, const VerifyOptions& o) {
  ClaimResult r;
  const std::uint64_t ell = code.middle_weight();
  for (std::uint32_t t = 3; t <= 4; ++t) {
    if (code.length() < t) continue;
    const auto params = generalized_design_params(code, ell, t);
    BlockCountOptions bo;
    bo.threads = o.threads;
    bo.budget = o.block_budget;
    if (binomial(code.length(), t).get_d() > o.exhaustive_limit) bo.samples = o.samples;
    DesignReport blocks;
    try {
      blocks = design_check_bruteforce(code, ell, t, bo);
    } catch (const InputError&) {
      continue;
    }
    ++r.checked;
    for (const auto& e : params.entries) {
      auto it = blocks.lambda_by_class.find(e.tclass);
      if (e.census == 0) {
        if (it != blocks.lambda_by_class.end()) fail(r, Json{{"class", e.tclass.name()}, {"note", "census empty but block count saw it"}});
        continue;
      }
      if (it == blocks.lambda_by_class.end()) continue;  // not hit by sampling
      if (!e.lambda || *e.lambda != it->second) {
        fail(r, Json{{"class", e.tclass.name()}, {"formula", e.lambda ? e.lambda->get_str() : "undefined"},
                     {"counted", it->second.get_str()}});
      }
    }
    if (blocks.class_conflict) fail(r, Json{{"t", t}, {"note", "class with two lambda values"}});
  }
  r.note = "lambda formulas for the middle shell against block counts, per nonempty class";
  return r;
}

ClaimResult claim_difference(const GrmCode& code, const VerifyOptions&) {
  ClaimResult r;
  if (code.q() < 3 || code.m() < 2) {
    r.applicable = false;
    r.note = "needs q >= 3 and m >= 2";
    return r;
  }
  const auto t1 = find_class_witness(code, {3, 2, Subcase::kNone});
  const auto t2 = find_class_witness(code, {3, 1, Subcase::kNone});
  const auto expected = rank_difference_polynomial(code.q(), code.m());
  const auto brute = jacobi_brute_force_serial(code, *t1) - jacobi_brute_force_serial(code, *t2);
  const auto closed = jacobi_closed_form(code, {3, 2, Subcase::kNone}) - jacobi_closed_form(code, {3, 1, Subcase::kNone});
  r.checked = 2;
  if (!(brute == expected)) fail(r, Json{{"route", "brute"}, {"diff", diff_json(brute, expected)}});
  if (!(closed == expected)) fail(r, Json{{"route", "closed"}, {"diff", diff_json(closed, expected)}});
  r.note = "T1 = " + points_json(*t1).dump() + ", T2 = " + points_json(*t2).dump();
  return r;
}

ClaimResult claim_dual(const GrmCode& code, const VerifyOptions&) {
  ClaimResult r;
  const BigInt size = big_pow(code.q(), code.size() == 0 ? 0 : code.m() + 1ULL);
  const BigInt dual_size = big_pow(code.q(), code.length() - code.m() - 1);
  std::vector<JacobiPolynomial> inputs{as_jacobi(grm_weight_enumerator(code.q(), code.m()))};
  for (std::uint32_t t = 2; t <= 4 && t <= code.length(); ++t) {
    for (const auto& c : candidate_classes(t, code.m())) {
      if (auto w = find_class_witness(code, c)) inputs.push_back(jacobi_brute_force_serial(code, *w));
    }
  }
  for (const auto& j : inputs) {
    const auto d = dual_jacobi(j, size, code.q());
    const auto back = dual_jacobi(d, dual_size, code.q());
    ++r.checked;
    if (d.evaluate_at_ones() != dual_size || !d.is_bihomogeneous()) {
      fail(r, Json{{"t", j.t()}, {"note", "dual evaluation at ones"}, {"value", d.evaluate_at_ones().get_str()}});
    }
    if (!(back == j)) fail(r, Json{{"t", j.t()}, {"note", "double transform"}, {"diff", diff_json(back, j)}});
  }
  const auto fast = dual_weight_enumerator(code.q(), code.m());
  const auto slow = as_weight_enumerator(dual_jacobi(inputs.front(), size, code.q()));
  if (!(fast == slow)) fail(r, Json{{"note", "dual weight enumerator routes differ"}});
  r.note = "weight enumerator and one Jacobi polynomial per class";
  return r;
}

ClaimResult claim_dual_difference(const GrmCode& code, const VerifyOptions&) {
  ClaimResult r;
  if (code.q() < 3 || code.m() < 2) {
    r.applicable = false;
    r.note = "needs q >= 3 and m >= 2";
    return r;
  }
  const BigInt size = big_pow(code.q(), code.m() + 1ULL);
  const auto d1 = dual_jacobi(jacobi_closed_form(code, {3, 2, Subcase::kNone}), size, code.q());
  const auto d2 = dual_jacobi(jacobi_closed_form(code, {3, 1, Subcase::kNone}), size, code.q());
  const auto diff = d1 - d2;
  const auto n = static_cast<std::int64_t>(code.length());
  for (std::int64_t ell = 3; ell <= n; ++ell) {
    ++r.checked;
    const BigInt expanded = diff.coefficient(0, 3, n - ell, ell - 3);
    const BigInt streamed = dual_diff_coefficient(code.q(), code.m(), static_cast<std::uint64_t>(ell));
    if (expanded != streamed) fail(r, Json{{"l", ell}, {"expanded", expanded.get_str()}, {"streamed", streamed.get_str()}});
  }
  r.note = "streamed convolution against full dual expansion, every l in [3, n]";
  return r;
}

using ClaimFn = std::function<ClaimResult(const GrmCode&, const VerifyOptions&)>;

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
  static const std::vector<std::pair<std::string, ClaimFn>> claims{
      {"weight-enumerator", claim_weight_enumerator},
      {"jacobi-two-point", [](const GrmCode& c, const VerifyOptions& o) { return closed_form_equivalence(c, 2, o); }},
      {"jacobi-three-point", [](const GrmCode& c, const VerifyOptions& o) { return closed_form_equivalence(c, 3, o); }},
      {"jacobi-four-point", [](const GrmCode& c, const VerifyOptions& o) { return closed_form_equivalence(c, 4, o); }},
      {"counts-two-point", [](const GrmCode& c, const VerifyOptions& o) { return counts_claim(c, 2, o); }},
      {"counts-three-point", [](const GrmCode& c, const VerifyOptions& o) { return counts_claim(c, 3, o); }},
      {"counts-four-point", [](const GrmCode& c, const VerifyOptions& o) { return counts_claim(c, 4, o); }},
      {"b-to-a", claim_b_to_a},
      {"translation-invariance", claim_translation},
      {"classification-invariance", claim_classification},
      {"design-criterion", claim_design_criterion},
      {"two-designs", claim_two_designs},
      {"not-three-designs", claim_not_three_designs},
      {"generalized-designs", claim_generalized},
      {"difference-identity", claim_difference},
      {"dual-transform", claim_dual},
      {"dual-difference", claim_dual_difference},
  };
  return claims;
}

}  // namespace

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

ClaimResult run_claim(const std::string& claim, const GrmCode& code, const VerifyOptions& options) {
  for (const auto& [name, fn] : registry()) {
    if (name != claim) continue;
    ClaimResult r = fn(code, options);
    r.claim = name;
    r.q = code.q();
    r.m = code.m();
    return r;
  }
  throw InputError("unknown claim '" + claim + "'");
}

}  // namespace grm
