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

// Serial references against their OpenMP kernels. Arg 0 = serial, N > 0 =
// parallel with N workers.

#include <benchmark/benchmark.h>

#include "grm/conjecture.hpp"
#include "grm/designs.hpp"
#include "grm/jacobi.hpp"

namespace {

using namespace grm;

const GrmCode& code_5_3() {
  static const GrmCode c = make_code(5, 1, 3);
  return c;
}

void BM_BruteForce(benchmark::State& st) {
  const auto& code = code_5_3();
  const auto T = *find_class_witness(code, {4, 3, Subcase::kNone});
  const int threads = static_cast<int>(st.range(0));
  for (auto _ : st) {
    auto j = threads == 0 ? jacobi_brute_force_serial(code, T) : jacobi_brute_force(code, T, BruteMode::kFast, threads);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_BruteForce)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BruteForceFullScan(benchmark::State& st) {
  const auto code = make_code(3, 1, 4);
  const auto T = *find_class_witness(code, {3, 2, Subcase::kNone});
  const int threads = static_cast<int>(st.range(0));
  for (auto _ : st) {
    auto j = threads == 0 ? jacobi_brute_force_serial(code, T, BruteMode::kFullScan)
                          : jacobi_brute_force(code, T, BruteMode::kFullScan, threads);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_BruteForceFullScan)->Arg(0)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CountTables(benchmark::State& st) {
  const auto& code = code_5_3();
  const auto T = *find_class_witness(code, {4, 2, Subcase::kGeneric});
  const int threads = static_cast<int>(st.range(0));
  for (auto _ : st) {
    auto t = threads == 0 ? count_tables_serial(code, T) : count_tables(code, T, threads);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_CountTables)->Arg(0)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_BlockCount(benchmark::State& st) {
  const auto code = make_code(3, 1, 3);
  const int threads = static_cast<int>(st.range(0));
  BlockCountOptions o;
  o.threads = threads;
  for (auto _ : st) {
    auto r = threads == 0 ? design_check_bruteforce_serial(code, 18, 4, o) : design_check_bruteforce(code, 18, 4, o);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_BlockCount)->Arg(0)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ScanPair(benchmark::State& st) {
  const int threads = static_cast<int>(st.range(0));
  for (auto _ : st) {
    auto r = threads == 0 ? scan_pair_serial(7, 4) : scan_pair(7, 4, threads);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ScanPair)->Arg(0)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
