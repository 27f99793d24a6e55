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

#include <set>

#include "grm/code.hpp"
#include "grm/polynomial.hpp"

using namespace grm;

TEST_CASE("point and codeword indexing round-trips") {
  const auto code = make_code(3, 1, 2);
  CHECK(code.length() == 9);
  CHECK(code.size() == 27);
  CHECK(format_point(code.point(5)) == "(1,2)");
  for (std::uint64_t i = 0; i < code.length(); ++i) CHECK(code.point_index(code.point(i)) == i);
  for (std::uint64_t i = 0; i < code.size(); ++i) CHECK(code.codeword_index(code.codeword(i)) == i);
  const auto c = code.codeword(7);
  CHECK(c.b.index == 1);
  CHECK(format_point(c.lambda) == "(0,2)");
}

TEST_CASE("weights agree with the closed weight formula") {
  for (auto [p, k, m] : {std::array{2u, 1u, 3u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {5u, 1u, 2u}}) {
    const auto code = make_code(p, k, m);
    for (const auto& c : code.codewords()) {
      CHECK(code.weight(c) == code.weight_formula(c));
      CHECK(code.support(c).size() == code.weight(c));
    }
  }
}

TEST_CASE("codewords are affine functionals") {
  const auto code = make_code(2, 2, 2);
  const auto& F = code.field();
  const auto c = code.codeword(37);
  const auto ev = code.expand(c);
  for (std::uint64_t i = 0; i < code.length(); ++i) {
    const auto u = code.point(i);
    Elem v = c.b;
    for (std::size_t j = 0; j < u.size(); ++j) v = F.add(v, F.mul(c.lambda[j], u[j]));
    CHECK(ev[i] == v);
  }
}

TEST_CASE("weight enumerator three-term form") {
  const auto e = grm_weight_enumerator(3, 2);
  CHECK(e.counts.size() == 3);
  CHECK(e.count(0) == 1);
  CHECK(e.count(6) == 24);
  CHECK(e.count(9) == 2);
  CHECK(e.total() == 27);
  CHECK(make_code(3, 1, 2).shell(6).size() == 24);
}

TEST_CASE("point sets") {
  const auto code = make_code(3, 1, 2);
  CHECK_THROWS_AS(PointSet(code, parse_points(code, "(0,0);(0,0)")), InputError);
  CHECK_THROWS_AS(parse_points(code, "(0,3)"), InputError);
  CHECK_THROWS_AS(parse_points(code, "(0,1,2)"), InputError);
  CHECK_THROWS_AS(parse_points(code, "0,1"), InputError);
  const PointSet T(code, parse_points(code, " (1,1) ; (2,0)"));
  CHECK(T.size() == 2);
  CHECK_FALSE(T.contains_origin());
  CHECK(translate_to_origin(code, T).contains_origin());
}

TEST_CASE("classification of small sets") {
  const auto code = make_code(3, 1, 2);
  auto cls = [&](const char* s) { return classify_T(code, PointSet(code, parse_points(code, s))).name(); };
  CHECK(cls("(0,0);(1,2)") == "t2-rank1");
  CHECK(cls("(0,0);(1,1);(2,2)") == "t3-rank1");
  CHECK(cls("(0,0);(0,1);(1,0)") == "t3-rank2");
  CHECK(cls("(0,0);(1,0);(0,1);(1,1)") == "t4-rank2-generic");
  CHECK(cls("(0,0);(0,1);(0,2);(1,0)") == "t4-rank2-collinear");
  CHECK_THROWS_AS(cls("(0,0)"), InputError);

  const auto big = make_code(3, 1, 3);
  CHECK(classify_T(big, PointSet(big, parse_points(big, "(0,0,0);(1,0,0);(0,1,0);(0,0,1)"))).name() == "t4-rank3");

  // Four points on a line exist only for q >= 4.
  const auto f4 = make_code(2, 2, 2);
  CHECK(classify_T(f4, PointSet(f4, parse_points(f4, "(0,0);(0,1);(0,2);(0,3)"))).name() == "t4-rank1");
}

TEST_CASE("affine planes over F_2 are generic") {
  const auto code = make_code(2, 1, 3);
  CHECK(classify_T(code, PointSet(code, parse_points(code, "(0,0,0);(1,0,0);(0,1,0);(1,1,0)"))).name() ==
        "t4-rank2-generic");
}

TEST_CASE("rank and normal form") {
  const auto F = Field::make(5, 1);
  CHECK(matrix_rank(F, {{Elem{1}, Elem{2}}, {Elem{2}, Elem{4}}}) == 1);
  CHECK(matrix_rank(F, {{Elem{1}, Elem{2}}, {Elem{2}, Elem{3}}}) == 2);
  const auto code = make_code(5, 1, 2);
  // u3 = 2 u1 + 3 u2: a + b = 5 = 0, ab = 6 = 1, so generic.
  const auto nf = rank2_normal_form(code, PointSet(code, parse_points(code, "(0,0);(1,0);(0,1);(2,3)")));
  CHECK(nf.subcase == Subcase::kGeneric);
}

TEST_CASE("class names parse back") {
  for (std::uint32_t t = 2; t <= 4; ++t)
    for (const auto& c : candidate_classes(t, 3)) CHECK(parse_tclass(c.name()) == c);
  CHECK_FALSE(parse_tclass("t5-rank1"));
  CHECK(candidate_classes(4, 2).size() == 3);
  CHECK(candidate_classes(4, 3).size() == 4);
}
