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

#include "grm/serialize.hpp"

#include <sstream>

namespace grm {

Json to_json(const JacobiPolynomial& j) {
  Json terms = Json::array();
  for (const auto& [mono, c] : j.terms()) {
    terms.push_back({{"e_w", mono.w}, {"e_z", mono.z}, {"e_x", mono.x}, {"e_y", mono.y}, {"coeff", c.get_str()}});
  }
  return Json{{"t", j.t()}, {"n", j.n()}, {"terms", std::move(terms)}};
}

JacobiPolynomial polynomial_from_json(const Json& j) {
  try {
    JacobiPolynomial out(j.at("t").get<std::uint64_t>(), j.at("n").get<std::uint64_t>());
    for (const auto& term : j.at("terms")) {
      BigInt c;
      if (c.set_str(term.at("coeff").get<std::string>(), 10) != 0) throw InputError("malformed coefficient");
      out.add(Monomial{term.at("e_w").get<std::int64_t>(), term.at("e_z").get<std::int64_t>(),
                       term.at("e_x").get<std::int64_t>(), term.at("e_y").get<std::int64_t>()},
              c);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json to_json(const WeightEnumerator& e) {
  Json counts = Json::array();
  for (const auto& [w, c] : e.counts) counts.push_back({{"weight", w}, {"count", c.get_str()}});
  return Json{{"n", e.n}, {"counts", std::move(counts)}};
}

Json to_json(const TermDiff& d) {
  return Json{{"e_w", d.mono.w},
              {"e_z", d.mono.z},
              {"e_x", d.mono.x},
              {"e_y", d.mono.y},
              {"left", d.left.get_str()},
              {"right", d.right.get_str()}};
}

Json to_json(const GeneralizedParams& g) {
  Json lambdas = Json::array();
  for (const auto& e : g.entries) {
    lambdas.push_back({{"class", e.tclass.name()},
                       {"lambda", e.lambda ? Json(e.lambda->get_str()) : Json(nullptr)},
                       {"census", e.census}});
  }
  return Json{{"v", g.v}, {"k", g.k}, {"lambdas", std::move(lambdas)}};
}

Json to_json(const DesignReport& r) {
  Json by_class = Json::array();
  for (const auto& [c, lambda] : r.lambda_by_class) {
    auto it = r.subsets_by_class.find(c);
    by_class.push_back({{"class", c.name()},
                        {"lambda", lambda.get_str()},
                        {"subsets", it == r.subsets_by_class.end() ? 0 : it->second}});
  }
  Json distinct = Json::array();
  for (const auto& v : r.distinct_lambdas) distinct.push_back(v.get_str());
  Json out{{"q", r.q},
           {"m", r.m},
           {"l", r.ell},
           {"t", r.t},
           {"method", r.method},
           {"shell_size", r.shell_size},
           {"verdict", r.verdict()},
           {"is_t_design", r.is_t_design},
           {"trivial", r.trivial},
           {"degenerate", r.degenerate},
           {"class_conflict", r.class_conflict},
           {"subsets_checked", r.subsets_checked},
           {"lambda_by_class", std::move(by_class)},
           {"distinct_lambdas", std::move(distinct)}};
  out["incidence_total"] = r.incidence_total ? Json(r.incidence_total->get_str()) : Json(nullptr);
  out["generalized"] = r.generalized ? to_json(*r.generalized) : Json(nullptr);
  return out;
}

Json to_json(const ScanResult& r) {
  Json shells = Json::array();
  for (const auto& s : r.shells) {
    shells.push_back({{"l", s.ell},
                      {"dual_count", s.dual_count.get_str()},
                      {"diff_coeff", s.diff_coefficient.get_str()},
                      {"trivial", s.trivial}});
  }
  Json out{{"q", r.q}, {"m", r.m}, {"verdict", to_string(r.verdict)}, {"reason", r.reason}};
  out["counterexample_l"] = r.counterexamples.empty() ? Json(nullptr) : Json(r.counterexamples.front());
  // A counterexample is a zero coefficient by definition.
  out["counterexample_coeff"] = r.counterexamples.empty() ? Json(nullptr) : Json("0");
  out["zero_coefficient_l"] = r.counterexamples;
  out["confirmed_up_to_n_minus_3"] = r.confirmed_up_to_n_minus_3;
  out["shells_omitted"] = r.shells_omitted;
  out["shells"] = std::move(shells);
  return out;
}

std::string design_csv_header() { return "q,m,l,t,class,lambda,verdict"; }

std::vector<std::string> design_csv_rows(const DesignReport& r) {
  std::vector<std::string> rows;
  for (const auto& [c, lambda] : r.lambda_by_class) {
    std::ostringstream os;
    os << r.q << ',' << r.m << ',' << r.ell << ',' << r.t << ',' << c.name() << ',' << lambda.get_str() << ','
       << r.verdict();
    rows.push_back(os.str());
  }
  return rows;
}

std::string polynomial_csv(const JacobiPolynomial& j) {
  std::ostringstream os;
  os << "e_w,e_z,e_x,e_y,coeff\n";
  for (const auto& [mono, c] : j.terms()) {
    os << mono.w << ',' << mono.z << ',' << mono.x << ',' << mono.y << ',' << c.get_str() << '\n';
  }
  return os.str();
}

}  // namespace grm
