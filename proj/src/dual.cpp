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

#include <algorithm>
#include <map>
#include <utility>

#include "grm/binomial.hpp"
#include "grm/jacobi.hpp"

namespace grm {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

std::vector<BigInt> binomial_row(std::uint64_t n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    row[i + 1] = row[i] * (n - i);
    mpz_divexact_ui(row[i + 1].get_mpz_t(), row[i + 1].get_mpz_t(), i + 1);
  }
  return row;
}

}  // namespace

std::vector<BigInt> binomial_product_convolution(std::uint64_t A, std::uint64_t B, std::uint64_t alpha) {
  auto left = binomial_row(A);
  BigInt apow = 1;
  for (auto& c : left) {
    c *= apow;
    apow *= alpha;
  }
  auto right = binomial_row(B);
  for (std::uint64_t j = 1; j <= B; j += 2) right[j] = -right[j];
  std::vector<BigInt> out(A + B + 1, 0);
  for (std::uint64_t i = 0; i <= A; ++i) {
    if (left[i] == 0) continue;
    for (std::uint64_t j = 0; j <= B; ++j) out[i + j] += left[i] * right[j];
  }
  return out;
}

std::vector<BigInt> binomial_product_recurrence(std::uint64_t A, std::uint64_t B, std::uint64_t alpha) {
  const std::uint64_t deg = A + B;
  std::vector<BigInt> c(deg + 1, 0);
  c[0] = 1;
  const auto a = static_cast<long>(alpha);
  const auto Al = static_cast<long>(A);
  const auto Bl = static_cast<long>(B);
  for (std::uint64_t l = 0; l < deg; ++l) {
    const auto li = static_cast<long>(l);
    BigInt next = c[l] * (Al * a - Bl - (a - 1) * li);
    if (l > 0) next -= c[l - 1] * (a * (Al + Bl - li + 1));
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), l + 1);
    c[l + 1] = std::move(next);
  }
  return c;
}

BinomialProductStream::BinomialProductStream(std::uint64_t A, std::uint64_t B, std::uint64_t alpha,
                                             std::uint64_t l0)
    : A_(static_cast<long>(A)),
      B_(static_cast<long>(B)),
      alpha_(static_cast<long>(alpha)),
      l_(l0),
      prev_(l0 == 0 ? BigInt(0) : binomial_product_coefficient(A, B, alpha, l0 - 1)),
      cur_(binomial_product_coefficient(A, B, alpha, l0)) {}

void BinomialProductStream::advance() {
  const auto li = static_cast<long>(l_);
  BigInt next = cur_ * (A_ * alpha_ - B_ - (alpha_ - 1) * li);
  if (l_ > 0) next -= prev_ * (alpha_ * (A_ + B_ - li + 1));
  mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), l_ + 1);
  prev_ = std::move(cur_);
  cur_ = std::move(next);
  ++l_;
}

BigInt binomial_product_coefficient(std::uint64_t A, std::uint64_t B, std::uint64_t alpha, std::uint64_t l) {
  if (l > A + B) return 0;
  if (alpha == 0) {
    BigInt r = binomial(B, l);
    return l % 2 ? BigInt(-r) : r;
  }
  const std::uint64_t lo = l > B ? l - B : 0;
  const std::uint64_t hi = std::min(A, l);
  // term_i = C(A,i) alpha^i C(B,l-i); the ratio term_{i+1}/term_i is
  // (A-i) alpha (l-i) / ((i+1)(B-l+i+1)).
  BigInt alpha_pow;
  mpz_ui_pow_ui(alpha_pow.get_mpz_t(), alpha, lo);
  BigInt term = binomial(A, lo) * alpha_pow * binomial(B, l - lo);
  BigInt sum = 0;
  for (std::uint64_t i = lo;; ++i) {
    if ((l - i) % 2) {
      sum -= term;
    } else {
      sum += term;
    }
    if (i == hi) break;
    term *= (A - i) * alpha;
    term *= l - i;
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), i + 1);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), B - l + i + 1);
  }
  return sum;
}

JacobiPolynomial dual_jacobi(const JacobiPolynomial& j, const BigInt& code_size, std::uint32_t q) {
  if (code_size <= 0) throw InputError("code size must be positive");
  if (!j.is_bihomogeneous()) throw InputError("input polynomial is not bi-homogeneous");
  const std::uint64_t t = j.t();
  const std::uint64_t rest = j.n() - t;
  const std::uint64_t alpha = q - 1;
  std::vector<std::vector<BigInt>> acc(t + 1, std::vector<BigInt>(rest + 1, 0));
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<BigInt>> xy_cache;
  for (const auto& [mono, coef] : j.terms()) {
    // (w + (q-1)z)^ew (w - z)^ez and (x + (q-1)y)^ex (x - y)^ey, stratum by stratum.
    const auto wz = binomial_product_convolution(mono.w, mono.z, alpha);
    auto it = xy_cache.find({mono.x, mono.y});
    if (it == xy_cache.end()) {
      it = xy_cache.emplace(std::pair{mono.x, mono.y}, binomial_product_convolution(mono.x, mono.y, alpha)).first;
    }
    const auto& xy = it->second;
    for (std::uint64_t k = 0; k <= t; ++k) {
      if (wz[k] == 0) continue;
      const BigInt scale = coef * wz[k];
      for (std::uint64_t l = 0; l <= rest; ++l) {
        if (xy[l] != 0) acc[k][l] += scale * xy[l];
      }
    }
  }
  JacobiPolynomial out(t, j.n());
  for (std::uint64_t k = 0; k <= t; ++k) {
    for (std::uint64_t l = 0; l <= rest; ++l) {
      BigInt& c = acc[k][l];
      if (c == 0) continue;
      if (!mpz_divisible_p(c.get_mpz_t(), code_size.get_mpz_t())) {
        throw InputError("dual transform: coefficient of " +
                         Monomial{static_cast<std::int64_t>(t - k), static_cast<std::int64_t>(k),
                                  static_cast<std::int64_t>(rest - l), static_cast<std::int64_t>(l)}
                             .to_string() +
                         " is not divisible by the code size");
      }
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), code_size.get_mpz_t());
      out.add(Monomial{static_cast<std::int64_t>(t - k), static_cast<std::int64_t>(k),
                       static_cast<std::int64_t>(rest - l), static_cast<std::int64_t>(l)},
              c);
    }
  }
  return out;
}

}  // namespace grm
