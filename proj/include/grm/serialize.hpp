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

#include <json.hpp>
#include <string>
#include <vector>

#include "grm/conjecture.hpp"
#include "grm/designs.hpp"
#include "grm/polynomial.hpp"

namespace grm {

using Json = nlohmann::ordered_json;

// Big integers are always written as decimal strings.

/// {"t", "n", "terms": [{"e_w", "e_z", "e_x", "e_y", "coeff"}...]}, terms in
/// ascending (e_w, e_z, e_x, e_y) order.
Json to_json(const JacobiPolynomial& j);
JacobiPolynomial polynomial_from_json(const Json& j);

Json to_json(const WeightEnumerator& e);
Json to_json(const TermDiff& d);
Json to_json(const DesignReport& r);
Json to_json(const GeneralizedParams& g);
Json to_json(const ScanResult& r);

/// Header line for design CSV output.
std::string design_csv_header();
/// One "q,m,ell,t,class,lambda,verdict" row per class.
std::vector<std::string> design_csv_rows(const DesignReport& r);

std::string polynomial_csv(const JacobiPolynomial& j);

}  // namespace grm
