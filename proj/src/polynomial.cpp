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

#include "grm/polynomial.hpp"

#include <sstream>

namespace grm {

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto var = [&](char name, std::int64_t e) {
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << name;
    if (e != 1) os << '^' << e;
  };
  var('w', w);
  var('z', z);
  var('x', x);
  var('y', y);
  if (first) os << '1';
  return os.str();
}

JacobiPolynomial::JacobiPolynomial(std::uint64_t t, std::uint64_t n) : t_(t), n_(n) {
  if (t > n) throw InputError("|T| exceeds the code length");
}

void JacobiPolynomial::add(const Monomial& mono, const BigInt& c) {
  if (c == 0) return;
  if (mono.w < 0 || mono.z < 0 || mono.x < 0 || mono.y < 0) {
    throw InputError("negative exponent in " + mono.to_string());
  }
  if (static_cast<std::uint64_t>(mono.w + mono.z) != t_ || static_cast<std::uint64_t>(mono.x + mono.y) != n_ - t_) {
    throw InputError("term " + mono.to_string() + " is not bi-homogeneous of degrees (" + std::to_string(t_) + ", " +
                     std::to_string(n_ - t_) + ")");
  }
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt JacobiPolynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt JacobiPolynomial::evaluate_at_ones() const {
  BigInt s = 0;
  for (const auto& [mono, c] : terms_) s += c;
  return s;
}

bool JacobiPolynomial::is_bihomogeneous() const {
  for (const auto& [mono, c] : terms_) {
    if (c == 0 || mono.w < 0 || mono.z < 0 || mono.x < 0 || mono.y < 0) return false;
    if (static_cast<std::uint64_t>(mono.w + mono.z) != t_) return false;
    if (static_cast<std::uint64_t>(mono.x + mono.y) != n_ - t_) return false;
  }
  return true;
}

void JacobiPolynomial::check_shape(const JacobiPolynomial& other) const {
  if (t_ != other.t_ || n_ != other.n_) throw InputError("polynomials have different (t, n) shapes");
}

JacobiPolynomial& JacobiPolynomial::operator+=(const JacobiPolynomial& other) {
  check_shape(other);
  for (const auto& [mono, c] : other.terms_) add(mono, c);
  return *this;
}

JacobiPolynomial& JacobiPolynomial::operator-=(const JacobiPolynomial& other) {
  check_shape(other);
  for (const auto& [mono, c] : other.terms_) add(mono, -c);
  return *this;
}

std::string JacobiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = mono == Monomial{};
    if (mag != 1 || constant) {
      os << mag.get_str();
      if (!constant) os << '*';
    }
    if (!constant) os << mono.to_string();
  }
  return os.str();
}

std::vector<TermDiff> term_diff(const JacobiPolynomial& a, const JacobiPolynomial& b) {
  std::vector<TermDiff> out;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      out.push_back({ia->first, ia->second, 0});
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      out.push_back({ib->first, 0, ib->second});
      ++ib;
    } else {
      if (ia->second != ib->second) out.push_back({ia->first, ia->second, ib->second});
      ++ia;
      ++ib;
    }
  }
  return out;
}

BigInt WeightEnumerator::count(std::uint64_t weight) const {
  auto it = counts.find(weight);
  return it == counts.end() ? BigInt(0) : it->second;
}

BigInt WeightEnumerator::total() const {
  BigInt s = 0;
  for (const auto& [w, c] : counts) s += c;
  return s;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

WeightEnumerator grm_weight_enumerator(std::uint32_t q, std::uint32_t m) {
  if (m < 1) throw InputError("dimension m must be >= 1");
  const std::uint64_t n = ipow(q, m);
  const std::uint64_t mid = (q - 1ULL) * (n / q);
  WeightEnumerator e;
  e.n = n;
  e.counts[0] = 1;
  e.counts[mid] = big_pow(q, m + 1ULL) - q;
  e.counts[n] = q - 1;
  return e;
}

JacobiPolynomial as_jacobi(const WeightEnumerator& e) {
  JacobiPolynomial j(0, e.n);
  for (const auto& [w, c] : e.counts) {
    j.add(Monomial{0, 0, static_cast<std::int64_t>(e.n - w), static_cast<std::int64_t>(w)}, c);
  }
  return j;
}

WeightEnumerator as_weight_enumerator(const JacobiPolynomial& j) {
  if (j.t() != 0) throw InputError("weight enumerator needs an empty T");
  WeightEnumerator e;
  e.n = j.n();
  for (const auto& [mono, c] : j.terms()) e.counts[static_cast<std::uint64_t>(mono.y)] = c;
  return e;
}

}  // namespace grm
