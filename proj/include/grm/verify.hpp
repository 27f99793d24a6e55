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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grm/code.hpp"
#include "grm/serialize.hpp"

namespace grm {

struct VerifyOptions {
  /// Sweep every t-subset when C(n, t) is at most this; otherwise sample.
  double exhaustive_limit = 1e6;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0x5eed;
  /// Incidence-test budget for block counting.
  double block_budget = 4e9;
  int threads = 0;
};

struct ClaimResult {
  std::string claim;
  std::uint32_t q = 0;
  std::uint32_t m = 0;
  /// False when the claim's hypotheses exclude this (q, m).
  bool applicable = true;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string note;
  /// Payload describing the first failure, null on success.
  Json counterexample;
};

Json to_json(const ClaimResult& r);

/// Names accepted by run_claim, in the order verify runs them.
const std::vector<std::string>& claim_names();

/// Throws InputError for an unknown claim name.
ClaimResult run_claim(const std::string& claim, const GrmCode& code, const VerifyOptions& options = {});

/// (p, k, m) triples of the default verification set.
std::vector<std::array<std::uint32_t, 3>> default_verify_set();

}  // namespace grm
