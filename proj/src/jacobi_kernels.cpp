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

#include <omp.h>

#include "grm/jacobi.hpp"

namespace grm {
namespace {

// Flat table of (m1, n1) -> number of codewords.
class Tally {
 public:
  Tally(std::uint64_t t, std::uint64_t n) : t_(t), width_(n - t + 1), cells_((t + 1) * width_, 0) {}

  void add(std::uint64_t m1, std::uint64_t n1) { ++cells_[m1 * width_ + n1]; }
  void merge(const Tally& other) {
    for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
  }

  JacobiPolynomial to_polynomial(std::uint64_t n) const {
    JacobiPolynomial j(t_, n);
    for (std::uint64_t m1 = 0; m1 <= t_; ++m1) {
      for (std::uint64_t n1 = 0; n1 < width_; ++n1) {
        const std::uint64_t count = cells_[m1 * width_ + n1];
        if (count == 0) continue;
        j.add(Monomial{static_cast<std::int64_t>(t_ - m1), static_cast<std::int64_t>(m1),
                       static_cast<std::int64_t>(n - t_ - n1), static_cast<std::int64_t>(n1)},
              BigInt(static_cast<unsigned long>(count)));
      }
    }
    return j;
  }

 private:
  std::uint64_t t_;
  std::uint64_t width_;
  std::vector<std::uint64_t> cells_;
};

// Per-codeword work shared by the serial and parallel drivers.
class CodewordScanner {
 public:
  CodewordScanner(const GrmCode& code, const PointSet& T, BruteMode mode)
      : code_(code), T_(T), mode_(mode), in_T_(code.length(), false) {
    for (const auto& u : T) in_T_[code.point_index(u)] = true;
    if (mode == BruteMode::kFullScan) all_points_ = code.points();
  }

  void visit(std::uint64_t index, Tally& tally) const {
    const Codeword c = code_.codeword(index);
    std::uint64_t m1 = 0;
    for (const auto& u : T_) m1 += code_.evaluate(c, u).index != 0;
    std::uint64_t n1 = 0;
    if (mode_ == BruteMode::kFast) {
      n1 = code_.weight_formula(c) - m1;
    } else {
      for (std::uint64_t i = 0; i < all_points_.size(); ++i) {
        if (!in_T_[i] && code_.evaluate(c, all_points_[i]).index != 0) ++n1;
      }
    }
    tally.add(m1, n1);
  }

 private:
  const GrmCode& code_;
  const PointSet& T_;
  BruteMode mode_;
  std::vector<bool> in_T_;
  std::vector<Point> all_points_;
};

}  // namespace

JacobiPolynomial jacobi_brute_force_serial(const GrmCode& code, const PointSet& T, BruteMode mode) {
  const CodewordScanner scanner(code, T, mode);
  Tally tally(T.size(), code.length());
  for (std::uint64_t i = 0; i < code.size(); ++i) scanner.visit(i, tally);
  return tally.to_polynomial(code.length());
}

JacobiPolynomial jacobi_brute_force(const GrmCode& code, const PointSet& T, BruteMode mode, int threads) {
  const CodewordScanner scanner(code, T, mode);
  Tally total(T.size(), code.length());
  const auto size = static_cast<std::int64_t>(code.size());
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt)
  {
    Tally local(T.size(), code.length());
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < size; ++i) scanner.visit(static_cast<std::uint64_t>(i), local);
#pragma omp critical(grm_brute_merge)
    total.merge(local);
  }
  return total.to_polynomial(code.length());
}

}  // namespace grm
