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

#include "grm/jacobi.hpp"

#include <string>

namespace grm {
namespace {

// Shared quantities for the closed forms of RM_q(1,m).
struct Params {
  std::uint32_t q;
  std::uint32_t m;
  std::int64_t n;    // q^m
  std::int64_t s;    // q^(m-1), zeros of a non-constant word
  std::int64_t wgt;  // (q-1)q^(m-1)

  Params(std::uint32_t q_, std::uint32_t m_) : q(q_), m(m_) {
    n = static_cast<std::int64_t>(ipow(q, m));
    s = n / q;
    wgt = (q - 1) * s;
  }

  // q^(m - r); the class needs rank r <= m.
  BigInt qpow_m_minus(std::uint32_t r) const {
    if (r > m) throw InputError("affine rank " + std::to_string(r) + " impossible in dimension " + std::to_string(m));
    return big_pow(q, m - r);
  }
};

class TermWriter {
 public:
  TermWriter(JacobiPolynomial& j, const TClass& c, const Params& p) : j_(j), c_(c), p_(p) {}

  void operator()(const BigInt& coef, std::int64_t ew, std::int64_t ez, std::int64_t ex, std::int64_t ey) {
    if (coef == 0) return;
    if (coef < 0) {
      throw InputError("class " + c_.name() + " does not occur for q=" + std::to_string(p_.q) +
                       ", m=" + std::to_string(p_.m) + " (negative coefficient)");
    }
    j_.add(Monomial{ew, ez, ex, ey}, coef);
  }

 private:
  JacobiPolynomial& j_;
  const TClass& c_;
  const Params& p_;
};

void check_class(const TClass& c) {
  if (c.t < 2 || c.t > 4) throw InputError("closed forms exist only for |T| in {2, 3, 4}");
  if (c.rank < 1 || c.rank >= c.t) throw InputError("rank " + std::to_string(c.rank) + " inconsistent with |T| = " + std::to_string(c.t));
  const bool needs_subcase = c.t == 4 && c.rank == 2;
  if (needs_subcase != (c.subcase != Subcase::kNone)) throw InputError("sub-case inconsistent with class " + c.name());
}

}  // namespace

JacobiPolynomial jacobi_closed_form(const GrmCode& code, const TClass& c) {
  check_class(c);
  const Params p(code.q(), code.m());
  if (p.n < static_cast<std::int64_t>(c.t)) throw InputError("code length smaller than |T|");
  JacobiPolynomial j(c.t, static_cast<std::uint64_t>(p.n));
  TermWriter term(j, c, p);
  const BigInt q = p.q;
  const BigInt qm = big_pow(p.q, p.m);
  const BigInt qm1 = p.qpow_m_minus(1);
  const std::int64_t n = p.n, s = p.s, W = p.wgt;

  if (c.t == 2) {
    term(1, 2, 0, n - 2, 0);
    term(qm1 - 1, 2, 0, s - 2, W);
    term(2 * (q - 1) * qm1, 1, 1, s - 1, W - 1);
    term((q - 1) * (qm - qm1 - 1), 0, 2, s, W - 2);
    term(q - 1, 0, 2, 0, n - 2);
  } else if (c.t == 3 && c.rank == 2) {
    const BigInt qm2 = p.qpow_m_minus(2);
    term(1, 3, 0, n - 3, 0);
    term(qm2 - 1, 3, 0, s - 3, W);
    term(3 * qm2 * (q - 1), 2, 1, s - 2, W - 1);
    term(3 * qm2 * (q - 1) * (q - 1), 1, 2, s - 1, W - 2);
    term((q - 1) * (qm - 2 * qm1 + qm2 - 1), 0, 3, s, W - 3);
    term(q - 1, 0, 3, 0, n - 3);
  } else if (c.t == 3) {
    term(1, 3, 0, n - 3, 0);
    term(qm1 - 1, 3, 0, s - 3, W);
    term(3 * qm1 * (q - 1), 1, 2, s - 1, W - 2);
    term((q - 1) * (qm - 2 * qm1 - 1), 0, 3, s, W - 3);
    term(q - 1, 0, 3, 0, n - 3);
  } else if (c.rank == 3) {
    const BigInt qm2 = p.qpow_m_minus(2);
    const BigInt qm3 = p.qpow_m_minus(3);
    term(1, 4, 0, n - 4, 0);
    term(qm3 - 1, 4, 0, s - 4, W);
    term(4 * qm3 * (q - 1), 3, 1, s - 3, W - 1);
    term(6 * (q - 1) * (q - 1) * qm3, 2, 2, s - 2, W - 2);
    term(4 * qm3 * (q - 1) * (q - 1) * (q - 1), 1, 3, s - 1, W - 3);
    term((q - 1) * (qm - 3 * qm1 + 3 * qm2 - qm3 - 1), 0, 4, s, W - 4);
    term(q - 1, 0, 4, 0, n - 4);
  } else if (c.rank == 2 && c.subcase == Subcase::kCollinearTriple) {
    const BigInt qm2 = p.qpow_m_minus(2);
    term(1, 4, 0, n - 4, 0);
    term(qm2 - 1, 4, 0, s - 4, W);
    term(qm2 * (q - 1), 3, 1, s - 3, W - 1);
    term(3 * qm2 * (q - 1), 2, 2, s - 2, W - 2);
    term(qm2 * (q - 1) * (4 * q - 5), 1, 3, s - 1, W - 3);
    term((q - 1) * (qm - 3 * qm1 + 2 * qm2 - 1), 0, 4, s, W - 4);
    term(q - 1, 0, 4, 0, n - 4);
  } else if (c.rank == 2) {
    const BigInt qm2 = p.qpow_m_minus(2);
    term(1, 4, 0, n - 4, 0);
    term(qm2 - 1, 4, 0, s - 4, W);
    term(6 * qm2 * (q - 1), 2, 2, s - 2, W - 2);
    term(qm2 * (q - 1) * (4 * q - 8), 1, 3, s - 1, W - 3);
    term((q - 1) * (qm - 3 * qm1 + 3 * qm2 - 1), 0, 4, s, W - 4);
    term(q - 1, 0, 4, 0, n - 4);
  } else {
    term(1, 4, 0, n - 4, 0);
    term(qm1 - 1, 4, 0, s - 4, W);
    term(4 * qm1 * (q - 1), 1, 3, s - 1, W - 3);
    term((q - 1) * (qm - 3 * qm1 - 1), 0, 4, s, W - 4);
    term(q - 1, 0, 4, 0, n - 4);
  }
  return j;
}

std::vector<std::int64_t> a_from_b(const std::vector<std::uint64_t>& b, std::uint32_t t, std::uint32_t q) {
  if (b.size() != t + 1ULL) throw InputError("b vector must have t+1 entries");
  std::vector<std::int64_t> a(t + 1);
  for (std::uint32_t i = 0; i <= t; ++i) {
    a[i] = static_cast<std::int64_t>(b[t - i]) - (i == 0 ? 1 : 0) - (i == t ? static_cast<std::int64_t>(q) - 1 : 0);
    if (a[i] < 0) throw InternalError("negative a_" + std::to_string(i) + " from counting tables");
  }
  return a;
}

JacobiPolynomial jacobi_from_a(const std::vector<std::int64_t>& a, std::uint32_t q, std::uint32_t m, std::uint32_t t) {
  if (a.size() != t + 1ULL) throw InputError("a vector must have t+1 entries");
  const Params p(q, m);
  JacobiPolynomial j(t, static_cast<std::uint64_t>(p.n));
  const std::int64_t ti = t;
  j.add(Monomial{ti, 0, p.n - ti, 0}, 1);
  for (std::int64_t i = 0; i <= ti; ++i) {
    if (a[i] == 0) continue;
    j.add(Monomial{ti - i, i, p.s - (ti - i), p.wgt - i}, BigInt(static_cast<long>(a[i])));
  }
  j.add(Monomial{0, ti, 0, p.n - ti}, q - 1);
  return j;
}

std::vector<BigInt> closed_form_b(const TClass& c, std::uint32_t q_, std::uint32_t m) {
  check_class(c);
  const Params p(q_, m);
  const BigInt q = q_;
  if (c.t == 2) {
    const BigInt k = p.qpow_m_minus(1);
    return {k * (q - 1) * (q - 1), 2 * k * (q - 1), k};
  }
  if (c.t == 3 && c.rank == 2) {
    const BigInt k = p.qpow_m_minus(2);
    return {k * (q - 1) * (q - 1) * (q - 1), 3 * k * (q - 1) * (q - 1), 3 * k * (q - 1), k};
  }
  if (c.t == 3) {
    const BigInt k = p.qpow_m_minus(1);
    return {k * (q - 1) * (q - 2), 3 * k * (q - 1), 0, k};
  }
  if (c.rank == 3) {
    const BigInt k = p.qpow_m_minus(3);
    return {k * (q - 1) * (q - 1) * (q - 1) * (q - 1), 4 * k * (q - 1) * (q - 1) * (q - 1), 6 * k * (q - 1) * (q - 1),
            4 * k * (q - 1), k};
  }
  if (c.rank == 1) {
    const BigInt k = p.qpow_m_minus(1);
    return {k * (q - 1) * (q - 3), 4 * k * (q - 1), 0, 0, k};
  }
  // Rank 2: b_2 equals a_2, which the counting argument obtains by subtraction.
  const BigInt k = p.qpow_m_minus(2);
  if (c.subcase == Subcase::kCollinearTriple) {
    return {k * (q - 1) * (q - 1) * (q - 2), k * (q - 1) * (4 * q - 5), 3 * k * (q - 1), k * (q - 1), k};
  }
  return {k * (q - 1) * (q * q - 3 * q + 3), k * (q - 1) * (4 * q - 8), 6 * k * (q - 1), 0, k};
}

std::vector<BigInt> closed_form_a(const TClass& c, std::uint32_t q_, std::uint32_t m) {
  check_class(c);
  const Params p(q_, m);
  const BigInt q = q_;
  const BigInt qm = big_pow(q_, m);
  const BigInt qm1 = p.qpow_m_minus(1);
  if (c.t < 4) {
    // b -> a rule on the closed-form b.
    const auto b = closed_form_b(c, q_, m);
    std::vector<BigInt> a(c.t + 1);
    for (std::uint32_t i = 0; i <= c.t; ++i) {
      a[i] = b[c.t - i] - (i == 0 ? 1 : 0) - (i == c.t ? q - 1 : BigInt(0));
    }
    return a;
  }
  if (c.rank == 3) {
    const BigInt qm2 = p.qpow_m_minus(2);
    const BigInt k = p.qpow_m_minus(3);
    return {k - 1, 4 * (q - 1) * k, 6 * (q - 1) * (q - 1) * k, 4 * (q - 1) * (q - 1) * (q - 1) * k,
            (q - 1) * (qm - 3 * qm1 + 3 * qm2 - k - 1)};
  }
  if (c.rank == 1) {
    return {qm1 - 1, 0, 0, 4 * (q - 1) * qm1, (q - 1) * (qm - 3 * qm1 - 1)};
  }
  const BigInt k = p.qpow_m_minus(2);
  if (c.subcase == Subcase::kCollinearTriple) {
    return {k - 1, k * (q - 1), 3 * k * (q - 1), k * (q - 1) * (4 * q - 5), (q - 1) * (qm - 3 * qm1 + 2 * k - 1)};
  }
  return {k - 1, 0, 6 * k * (q - 1), k * (q - 1) * (4 * q - 8), (q - 1) * (qm - 3 * qm1 + 3 * k - 1)};
}

JacobiPolynomial rank_difference_polynomial(std::uint32_t q, std::uint32_t m) {
  if (m < 2) throw InputError("a rank-2 three-point set needs m >= 2");
  const Params p(q, m);
  if (p.s < 3) throw InputError("x exponent q^(m-1) - 3 would be negative");
  JacobiPolynomial j(3, static_cast<std::uint64_t>(p.n));
  const BigInt lead = -big_pow(q, m - 2) * (q - 1);
  static constexpr int kBinom3[4] = {1, 3, 3, 1};
  for (std::int64_t k = 0; k <= 3; ++k) {
    const BigInt c = lead * kBinom3[k] * (k % 2 ? -1 : 1);
    j.add(Monomial{3 - k, k, p.s - 3 + k, p.wgt - k}, c);
  }
  return j;
}

}  // namespace grm
