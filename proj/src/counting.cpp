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

using Table = std::vector<std::vector<std::uint64_t>>;

void check_input(const PointSet& T) {
  if (!T.empty() && !T.contains_origin()) throw InputError("count tables need a T containing the origin; translate first");
}

// Adds the contribution of functional number `index` (coordinates of lambda
// in V-order) to b_ij.
void tally_functional(const GrmCode& code, const PointSet& T, std::uint64_t index, Table& b_ij,
                      std::vector<std::uint32_t>& hist) {
  const Codeword c{code.point(index), code.field().zero()};
  std::fill(hist.begin(), hist.end(), 0);
  for (const auto& u : T) ++hist[code.evaluate(c, u).index];
  for (std::uint32_t j = 0; j < code.q(); ++j) ++b_ij[hist[j]][j];
}

CountTables finish(const GrmCode& code, const PointSet& T, Table b_ij) {
  CountTables out;
  out.t = static_cast<std::uint32_t>(T.size());
  out.q = code.q();
  out.b.assign(out.t + 1, 0);
  for (std::uint32_t i = 0; i <= out.t; ++i) {
    for (auto v : b_ij[i]) out.b[i] += v;
  }
  out.b_ij = std::move(b_ij);
  out.a = a_from_b(out.b, out.t, out.q);
  return out;
}

}  // namespace

CountTables count_tables_serial(const GrmCode& code, const PointSet& T) {
  check_input(T);
  Table b_ij(T.size() + 1, std::vector<std::uint64_t>(code.q(), 0));
  std::vector<std::uint32_t> hist(code.q());
  for (std::uint64_t i = 0; i < code.length(); ++i) tally_functional(code, T, i, b_ij, hist);
  return finish(code, T, std::move(b_ij));
}

CountTables count_tables(const GrmCode& code, const PointSet& T, int threads) {
  check_input(T);
  Table total(T.size() + 1, std::vector<std::uint64_t>(code.q(), 0));
  const auto n = static_cast<std::int64_t>(code.length());
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt)
  {
    Table local(T.size() + 1, std::vector<std::uint64_t>(code.q(), 0));
    std::vector<std::uint32_t> hist(code.q());
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) tally_functional(code, T, static_cast<std::uint64_t>(i), local, hist);
#pragma omp critical(grm_count_merge)
    for (std::size_t r = 0; r < total.size(); ++r) {
      for (std::size_t j = 0; j < total[r].size(); ++j) total[r][j] += local[r][j];
    }
  }
  return finish(code, T, std::move(total));
}

}  // namespace grm
