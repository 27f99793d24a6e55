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

#include "grm/jacobi.hpp"
#include "grm/serialize.hpp"
#include "grm/verify.hpp"

using namespace grm;

TEST_CASE("polynomial json round-trip") {
  const auto code = make_code(5, 1, 2);
  const auto j = jacobi_closed_form(code, {4, 2, Subcase::kGeneric});
  const auto js = to_json(j);
  CHECK(js["t"] == 4);
  CHECK(js["terms"][0]["coeff"].is_string());
  CHECK(polynomial_from_json(Json::parse(js.dump())) == j);
}

TEST_CASE("big coefficients survive serialization") {
  const auto code = make_code(7, 1, 3);
  const auto d = dual_jacobi(as_jacobi(grm_weight_enumerator(7, 3)), big_pow(7, 4), 7);
  bool wide = false;
  for (const auto& [mono, c] : d.terms()) wide = wide || !c.fits_slong_p();
  CHECK(wide);
  CHECK(polynomial_from_json(to_json(d)) == d);
}

TEST_CASE("malformed polynomial json") {
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"t":2,"n":4,"terms":[{"e_w":1,"e_z":0,"e_x":3,"e_y":0,"coeff":"1"}]})")),
                  InputError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"t":2,"n":4,"terms":[{"e_w":2,"e_z":0,"e_x":2,"e_y":0,"coeff":"x"}]})")),
                  InputError);
}

TEST_CASE("design csv") {
  CHECK(design_csv_header() == "q,m,l,t,class,lambda,verdict");
  const auto rows = design_csv_rows(design_check_jacobi(make_code(3, 1, 2), 6, 3));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "3,2,6,3,t3-rank1,4,not-design");
}

TEST_CASE("verify registry") {
  CHECK(claim_names().size() == 17);
  CHECK_THROWS_AS(run_claim("no-such-claim", make_code(2, 1, 2)), InputError);
  const auto r = run_claim("counts-four-point", make_code(5, 1, 2));
  CHECK(r.passed);
  CHECK(r.note.find("t4-rank2-generic") != std::string::npos);
  CHECK(r.note.find("t4-rank2-collinear") != std::string::npos);
  const auto na = run_claim("difference-identity", make_code(2, 1, 3));
  CHECK_FALSE(na.applicable);
  CHECK(to_json(na)["status"] == "N/A");
}
