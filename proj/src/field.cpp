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

#include "grm/field.hpp"

#include <limits>
#include <sstream>

namespace grm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t n) {
  if (n < 2) return {0, 0};
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;  // n itself is prime
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw InputError("integer power overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients c_0.., mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + static_cast<std::uint64_t>(p - b[i]) * lead) % p);
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits
// of code (c_0 least significant).
Poly monic_from_code(std::uint64_t code, std::uint32_t d, std::uint32_t p) {
  Poly f(d + 1, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[d] = 1;
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InputError("field extension degree must be >= 1");
  const std::uint64_t q = ipow(p, k);
  if (q > std::numeric_limits<std::uint32_t>::max() / 2) throw InputError("field order too large");
  if (k == 1) return Field(p, 1, {0, 1});
  // Lexicographic order on (c_0, .., c_{k-1}) with c_0 most significant.
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    Poly f(k + 1, 0);
    std::uint64_t r = rank;
    for (std::uint32_t i = k; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(r % p);
      r /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return Field(p, k, f);
  }
  throw InternalError("no irreducible polynomial found");
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(static_cast<std::uint32_t>(ipow(p, k))), modulus_(std::move(modulus)) {
  neg_table_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    auto d = digits(Elem{a});
    for (auto& c : d) c = (p_ - c) % p_;
    neg_table_[a] = from_digits(d).index;
  }
  if (q_ <= kTableLimit) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = add_slow(Elem{a}, Elem{b}).index;
        mul_table_[a * q_ + b] = mul_slow(Elem{a}, Elem{b}).index;
      }
    }
  }
}

void Field::check(Elem a) const {
  if (a.index >= q_) throw InputError("element index " + std::to_string(a.index) + " outside F_" + std::to_string(q_));
}

Elem Field::element(std::uint32_t index) const {
  check(Elem{index});
  return Elem{index};
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d(k_);
  std::uint32_t v = a.index;
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
  std::uint32_t v = 0;
  for (std::uint32_t i = k_; i-- > 0;) v = v * p_ + d[i];
  return Elem{v};
}

Elem Field::add_slow(Elem a, Elem b) const {
  if (k_ == 1) return Elem{(a.index + b.index) % p_};
  auto da = digits(a);
  const auto db = digits(b);
  for (std::uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return from_digits(da);
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (k_ == 1) return Elem{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.index) * b.index % p_)};
  const auto da = digits(a);
  const auto db = digits(b);
  Poly prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  auto r = poly_mod(prod, modulus_, p_);
  r.resize(k_, 0);
  return from_digits(r);
}

Elem Field::add(Elem a, Elem b) const {
  check(a);
  check(b);
  if (!add_table_.empty()) return Elem{add_table_[a.index * q_ + b.index]};
  return add_slow(a, b);
}

Elem Field::neg(Elem a) const {
  check(a);
  return Elem{neg_table_[a.index]};
}

Elem Field::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  if (!mul_table_.empty()) return Elem{mul_table_[a.index * q_ + b.index]};
  return mul_slow(a, b);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  check(a);
  if (a.index == 0) throw InputError("inverse of zero in F_" + std::to_string(q_));
  return pow(a, q_ - 2);
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = Elem{i};
  return out;
}

std::string Field::to_polynomial_string(Elem a) const {
  check(a);
  if (a.index == 0) return "0";
  const auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = k_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || d[i] != 1) os << d[i];
    if (i >= 1) os << 'a';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace grm
