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

// grmjacobi: command-line front end. Exit codes: 0 ok, 1 bad input,
// 2 a computed mismatch or failed claim.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grm/conjecture.hpp"
#include "grm/designs.hpp"
#include "grm/jacobi.hpp"
#include "grm/serialize.hpp"
#include "grm/verify.hpp"

namespace {

using grm::Json;

constexpr int kOk = 0;
constexpr int kInput = 1;
constexpr int kMismatch = 2;

struct Config {
  std::optional<std::uint32_t> p, k, m;
  std::string output = "pretty";
  int threads = 0;
  // jacobi
  std::optional<std::uint32_t> t_size, rank;
  std::string subcase;
  std::string points;
  std::string method = "both";
  // design
  std::optional<std::uint64_t> ell;
  std::optional<std::uint32_t> t;
  std::optional<std::uint64_t> samples;
  // verify
  std::vector<std::string> only;
  // scan
  std::string bound = "1e7";
  // enum
  bool dual = false;
};

int env_threads() {
  const char* s = std::getenv("GRM_THREADS");
  if (s == nullptr) return 0;
  try {
    return std::max(0, std::stoi(s));
  } catch (const std::exception&) {
    return 0;
  }
}

grm::GrmCode code_from(const Config& c) {
  if (!c.p || !c.m) throw grm::InputError("--p and --m are required");
  return grm::make_code(*c.p, c.k.value_or(1), *c.m);
}

void emit(const Config& c, const Json& j, const std::string& pretty, const std::string& csv) {
  if (c.output == "json")
    std::cout << j.dump(2) << "\n";
  else if (c.output == "csv")
    std::cout << csv;
  else
    std::cout << pretty;
}

Json points_json(const grm::PointSet& T) {
  Json a = Json::array();
  for (const auto& u : T) a.push_back(grm::format_point(u));
  return a;
}

int cmd_jacobi(const Config& c) {
  const auto code = code_from(c);
  if (c.method != "brute" && c.method != "closed" && c.method != "both")
    throw grm::InputError("--method must be brute, closed or both");

  // Work list: explicit T, one class, or every class of the given size.
  std::vector<grm::PointSet> sets;
  if (!c.points.empty()) {
    sets.emplace_back(code, grm::parse_points(code, c.points));
  } else {
    if (!c.t_size) throw grm::InputError("give --points or --t-size");
    std::vector<grm::TClass> classes;
    if (c.rank) {
      grm::TClass tc{*c.t_size, *c.rank, grm::Subcase::kNone};
      if (!c.subcase.empty()) {
        auto parsed = grm::parse_tclass("t" + std::to_string(*c.t_size) + "-rank" + std::to_string(*c.rank) + "-" + c.subcase);
        if (!parsed) throw grm::InputError("unknown subcase '" + c.subcase + "' (collinear or generic)");
        tc = *parsed;
      } else if (*c.t_size == 4 && *c.rank == 2) {
        throw grm::InputError("t = 4, rank 2 needs --subcase collinear or generic");
      }
      classes.push_back(tc);
    } else {
      if (*c.t_size < 2 || *c.t_size > 4) throw grm::InputError("--t-size must be 2, 3 or 4");
      classes = grm::candidate_classes(*c.t_size, code.m());
    }
    for (const auto& tc : classes) {
      auto w = grm::find_class_witness(code, tc, UINT64_MAX);
      if (!w) {
        if (c.rank) throw grm::InputError("class " + tc.name() + " does not occur for this code");
        continue;
      }
      sets.push_back(*w);
    }
  }

  bool all_match = true;
  Json results = Json::array();
  std::ostringstream pretty, csv;
  for (const auto& T : sets) {
    const auto tc = grm::classify_T(code, T);
    Json r{{"q", code.q()}, {"m", code.m()}, {"T", points_json(T)}, {"class", tc.name()}};
    std::optional<grm::JacobiPolynomial> brute, closed;
    if (c.method != "closed") brute = grm::jacobi_brute_force(code, T, grm::BruteMode::kFast, c.threads);
    if (c.method != "brute") closed = grm::jacobi_closed_form(code, tc);
    pretty << "T = " << points_json(T).dump() << "  class " << tc.name() << "\n";
    if (brute) {
      r["brute"] = grm::to_json(*brute);
      pretty << "  brute : " << brute->to_string() << "\n";
      csv << "# " << tc.name() << " brute\n" << grm::polynomial_csv(*brute);
    }
    if (closed) {
      r["closed"] = grm::to_json(*closed);
      pretty << "  closed: " << closed->to_string() << "\n";
      csv << "# " << tc.name() << " closed\n" << grm::polynomial_csv(*closed);
    }
    if (brute && closed) {
      Json diff = Json::array();
      for (const auto& d : grm::term_diff(*brute, *closed)) diff.push_back(grm::to_json(d));
      const bool match = diff.empty();
      all_match = all_match && match;
      r["diff"] = diff;
      r["match"] = match;
      pretty << "  diff  : " << (match ? "empty" : diff.dump()) << "\n";
    }
    results.push_back(r);
  }
  emit(c, Json{{"results", results}, {"match", all_match}}, pretty.str(), csv.str());
  return all_match ? kOk : kMismatch;
}

bool lambdas_agree(const grm::DesignReport& a, const grm::DesignReport& b) {
  return a.is_t_design == b.is_t_design && a.lambda_by_class == b.lambda_by_class && !a.class_conflict &&
         !b.class_conflict;
}

int cmd_design(const Config& c) {
  const auto code = code_from(c);
  if (!c.ell || !c.t) throw grm::InputError("design needs --l and --t");
  if (c.method != "brute" && c.method != "closed" && c.method != "both")
    throw grm::InputError("--method must be brute, closed or both");
  std::vector<grm::DesignReport> reports;
  if (c.method != "brute") {
    reports.push_back(grm::design_check_jacobi(code, *c.ell, *c.t, {grm::SubsetSweep::kAll, grm::JacobiSource::kClosedForm, c.threads}));
  }
  if (c.method != "closed") {
    grm::BlockCountOptions bo;
    bo.threads = c.threads;
    bo.samples = c.samples;
    reports.push_back(grm::design_check_bruteforce(code, *c.ell, *c.t, bo));
  }
  if (*c.ell == code.middle_weight() && (*c.t == 3 || *c.t == 4)) {
    for (auto& r : reports) r.generalized = grm::generalized_design_params(code, *c.ell, *c.t);
  }
  const bool agree = reports.size() < 2 || lambdas_agree(reports[0], reports[1]);

  Json arr = Json::array();
  std::ostringstream pretty, csv;
  csv << grm::design_csv_header() << "\n";
  for (const auto& r : reports) {
    arr.push_back(grm::to_json(r));
    for (const auto& row : grm::design_csv_rows(r)) csv << row << "\n";
    pretty << r.method << ": q=" << r.q << " m=" << r.m << " l=" << r.ell << " t=" << r.t << " blocks=" << r.shell_size
           << " -> " << (r.trivial ? "TRIVIAL design (full-weight shell)" : r.verdict()) << "\n";
    for (const auto& [tc, lam] : r.lambda_by_class) pretty << "  " << tc.name() << ": lambda = " << lam.get_str() << "\n";
    if (r.generalized) {
      for (const auto& e : r.generalized->entries) {
        pretty << "  formula " << e.tclass.name() << ": " << (e.lambda ? e.lambda->get_str() : "n/a")
               << " (census " << e.census << ")\n";
      }
    }
  }
  if (reports.size() == 2) pretty << (agree ? "routes agree\n" : "ROUTES DISAGREE\n");
  emit(c, Json{{"reports", arr}, {"agree", agree}}, pretty.str(), csv.str());
  return agree ? kOk : kMismatch;
}

int cmd_verify(const Config& c) {
  std::vector<std::array<std::uint32_t, 3>> pairs;
  if (c.p || c.m) {
    if (!c.p || !c.m) throw grm::InputError("give both --p and --m (and optionally --k)");
    pairs.push_back({*c.p, c.k.value_or(1), *c.m});
  } else {
    pairs = grm::default_verify_set();
  }
  std::vector<std::string> claims = c.only.empty() ? grm::claim_names() : c.only;
  for (const auto& name : claims) {
    if (std::find(grm::claim_names().begin(), grm::claim_names().end(), name) == grm::claim_names().end()) {
      std::string known;
      for (const auto& n : grm::claim_names()) known += " " + n;
      throw grm::InputError("unknown claim '" + name + "'; known:" + known);
    }
  }
  grm::VerifyOptions vo;
  vo.threads = c.threads;
  if (c.samples) vo.samples = *c.samples;

  bool ok = true;
  Json arr = Json::array();
  std::ostringstream pretty, csv;
  csv << "claim,q,m,status,checked\n";
  for (const auto& [p, k, m] : pairs) {
    const auto code = grm::make_code(p, k, m);
    for (const auto& name : claims) {
      const auto r = grm::run_claim(name, code, vo);
      const Json j = grm::to_json(r);
      arr.push_back(j);
      ok = ok && (!r.applicable || r.passed);
      const std::string status = j["status"];
      pretty << status << "  " << name << " q=" << r.q << " m=" << r.m << "  (" << r.checked << " checks; " << r.note << ")\n";
      if (!r.passed) pretty << "    counterexample: " << r.counterexample.dump() << "\n";
      csv << name << "," << r.q << "," << r.m << "," << status << "," << r.checked << "\n";
    }
  }
  emit(c, Json{{"results", arr}, {"passed", ok}}, pretty.str(), csv.str());
  return ok ? kOk : kMismatch;
}

double parse_bound(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(v > 0)) throw grm::InputError("bad --bound '" + s + "'");
  return v;
}

int cmd_scan(const Config& c) {
  const double bound = parse_bound(c.bound);
  std::vector<grm::ScanResult> results;
  if (c.p || c.m) {
    if (!c.p || !c.m) throw grm::InputError("give both --p and --m (and optionally --k)");
    const auto code = grm::make_code(*c.p, c.k.value_or(1), *c.m);
    results.push_back(grm::scan_pair(code.q(), code.m(), c.threads));
  } else {
    results = grm::conjecture_scan(bound, c.threads);
  }
  bool clean = true;
  Json arr = Json::array();
  std::ostringstream pretty, csv;
  csv << "q,m,verdict,counterexample_l,confirmed_up_to_n_minus_3\n";
  for (const auto& r : results) {
    arr.push_back(grm::to_json(r));
    clean = clean && r.verdict != grm::Verdict::kCounterexample;
    std::string ls;
    for (auto l : r.counterexamples) ls += (ls.empty() ? "" : " ") + std::to_string(l);
    pretty << "q=" << r.q << " m=" << r.m << "  " << grm::to_string(r.verdict);
    if (!ls.empty()) pretty << "  zero coefficient at l = " << ls;
    if (!r.reason.empty()) pretty << "  (" << r.reason << ")";
    pretty << "\n";
    csv << r.q << "," << r.m << "," << grm::to_string(r.verdict) << "," << ls << ","
        << (r.confirmed_up_to_n_minus_3 ? "true" : "false") << "\n";
  }
  emit(c, Json{{"bound", c.bound}, {"pairs", arr}}, pretty.str(), csv.str());
  return clean ? kOk : kMismatch;
}

int cmd_enum(const Config& c) {
  const auto code = code_from(c);
  const auto e = c.dual ? grm::dual_weight_enumerator(code.q(), code.m()) : grm::grm_weight_enumerator(code.q(), code.m());
  std::ostringstream pretty, csv;
  csv << "weight,count\n";
  for (const auto& [w, n] : e.counts) {
    pretty << "A_" << w << " = " << n.get_str() << "\n";
    csv << w << "," << n.get_str() << "\n";
  }
  emit(c, grm::to_json(e), pretty.str(), csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  c.threads = env_threads();
  CLI::App app{"Jacobi polynomials and designs of first-order generalized Reed-Muller codes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_field = [&](CLI::App* s) {
    s->add_option("--p", c.p, "field characteristic");
    s->add_option("--k", c.k, "extension degree (default 1)");
    s->add_option("--m", c.m, "number of variables");
    s->add_option("--output", c.output, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    s->add_option("--threads", c.threads, "worker count (default $GRM_THREADS, else all cores)");
  };

  auto* jac = app.add_subcommand("jacobi", "Jacobi polynomial of a point set or class");
  add_field(jac);
  jac->add_option("--t-size", c.t_size, "size of T when selecting by class");
  jac->add_option("--rank", c.rank, "affine rank of T");
  jac->add_option("--subcase", c.subcase, "collinear or generic (t = 4, rank 2)");
  jac->add_option("--points", c.points, "explicit T, e.g. \"(0,0);(0,1)\"");
  jac->add_option("--method", c.method, "brute, closed or both");

  auto* des = app.add_subcommand("design", "t-design check of a weight shell");
  add_field(des);
  des->add_option("--l", c.ell, "shell weight")->required();
  des->add_option("--t", c.t, "design strength")->required();
  des->add_option("--method", c.method, "brute, closed or both");
  des->add_option("--samples", c.samples, "sample this many t-subsets for block counting");

  auto* ver = app.add_subcommand("verify", "cross-check the closed forms and design claims");
  add_field(ver);
  ver->add_option("--only", c.only, "comma-separated claim names")->delimiter(',');
  ver->add_option("--samples", c.samples, "sampled subsets when a full sweep is too large");

  auto* scan = app.add_subcommand("scan", "dual-shell 3-design scan");
  add_field(scan);
  scan->add_option("--bound", c.bound, "scan pairs with q^(2m) < bound (e.g. 1e7, 1e9)");

  auto* en = app.add_subcommand("enum", "weight enumerator");
  add_field(en);
  en->add_flag("--dual", c.dual, "enumerate the dual code instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (jac->parsed()) return cmd_jacobi(c);
    if (des->parsed()) return cmd_design(c);
    if (ver->parsed()) return cmd_verify(c);
    if (scan->parsed()) return cmd_scan(c);
    return cmd_enum(c);
  } catch (const grm::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const grm::InternalError& e) {
    std::cerr << "internal mismatch: " << e.what() << "\n";
    return kMismatch;
  }
}
