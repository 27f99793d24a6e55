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

#include "grm/field.hpp"

using grm::Elem;
using grm::Field;

TEST_CASE("prime powers") {
  CHECK(grm::prime_power(9) == std::pair<std::uint32_t, std::uint32_t>{3, 2});
  CHECK(grm::prime_power(32) == std::pair<std::uint32_t, std::uint32_t>{2, 5});
  CHECK(grm::prime_power(12).first == 0);
  CHECK(grm::prime_power(1).first == 0);
  CHECK(grm::is_prime(251));
  CHECK_FALSE(grm::is_prime(1));
  CHECK(grm::ipow(3, 4) == 81);
  CHECK_THROWS_AS(grm::ipow(10, 30), grm::InputError);
}

TEST_CASE("bad field parameters") {
  CHECK_THROWS_AS(Field::make(4, 1), grm::InputError);
  CHECK_THROWS_AS(Field::make(2, 0), grm::InputError);
  CHECK_THROWS_AS(Field::make(3, 1).element(3), grm::InputError);
  CHECK_THROWS_AS(Field::make(5, 1).inv(Elem{0}), grm::InputError);
}

TEST_CASE("moduli are the least irreducibles") {
  CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
}

TEST_CASE("F_4 by hand") {
  const auto F = Field::make(2, 2);
  const Elem a{2}, a1{3};
  CHECK(F.to_polynomial_string(a) == "a");
  CHECK(F.to_polynomial_string(a1) == "a+1");
  CHECK(F.mul(a, a1) == F.one());
  CHECK(F.mul(a, a) == a1);
  CHECK(F.add(a, a1) == F.one());
  CHECK(F.inv(a) == a1);
}

TEST_CASE("prime field arithmetic is modular") {
  const auto F = Field::make(7, 1);
  for (std::uint32_t x = 0; x < 7; ++x)
    for (std::uint32_t y = 0; y < 7; ++y) {
      CHECK(F.add(Elem{x}, Elem{y}).index == (x + y) % 7);
      CHECK(F.mul(Elem{x}, Elem{y}).index == (x * y) % 7);
    }
}

TEST_CASE("field axioms hold for every q up to 16") {
  for (std::uint32_t q = 2; q <= 16; ++q) {
    const auto [p, k] = grm::prime_power(q);
    if (p == 0) continue;
    const auto F = Field::make(p, k);
    CAPTURE(q);
    const auto els = F.elements();
    REQUIRE(els.size() == q);
    for (auto x : els) {
      CHECK(F.add(x, F.neg(x)) == F.zero());
      CHECK(F.mul(x, F.one()) == x);
      if (x != F.zero()) CHECK(F.mul(x, F.inv(x)) == F.one());
      CHECK(F.pow(x, q) == x);
      for (auto y : els) {
        CHECK(F.add(x, y) == F.add(y, x));
        CHECK(F.mul(x, y) == F.mul(y, x));
        // Frobenius is additive.
        CHECK(F.pow(F.add(x, y), p) == F.add(F.pow(x, p), F.pow(y, p)));
        for (auto z : els) {
          CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
          CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative group is cyclic") {
  for (auto [p, k] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 4u}, {13u, 1u}}) {
    const auto F = Field::make(p, k);
    bool found = false;
    for (auto g : F.elements()) {
      if (g == F.zero()) continue;
      std::uint32_t order = 1;
      for (Elem x = g; x != F.one(); x = F.mul(x, g)) ++order;
      found = found || order == F.q() - 1;
    }
    CHECK(found);
  }
}

TEST_CASE("large fields use the slow path consistently") {
  const auto F = Field::make(2, 9);
  const Elem x{300}, y{77};
  CHECK(F.mul(F.inv(x), x) == F.one());
  CHECK(F.mul(x, F.add(y, F.one())) == F.add(F.mul(x, y), x));
}
