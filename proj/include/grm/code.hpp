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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grm/field.hpp"

namespace grm {

/// A point of V = F_q^m as its coordinate vector.
using Point = std::vector<Elem>;

/// Codeword lambda(x) + b of RM_q(1,m); lambda acts on V by dot product.
struct Codeword {
  std::vector<Elem> lambda;
  Elem b;

  bool is_constant() const;
  friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// First-order generalized Reed-Muller code RM_q(1,m) of length q^m.
///
/// Positions are the points of V in lexicographic order of their coordinate
/// index tuples (first coordinate most significant). Codewords are (lambda, b)
/// pairs ordered lexicographically by (lambda indices, b index), so codeword
/// number i has b = i mod q and lambda given by the remaining base-q digits.
class GrmCode {
 public:
  GrmCode(Field field, std::uint32_t m);

  const Field& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  std::uint32_t m() const { return m_; }
  /// Code length q^m.
  std::uint64_t length() const { return n_; }
  /// Number of codewords q^(m+1).
  std::uint64_t size() const { return size_; }
  /// Weight of every non-constant codeword, (q-1)q^(m-1).
  std::uint64_t middle_weight() const { return (q() - 1ULL) * (n_ / q()); }

  Point point(std::uint64_t index) const;
  std::uint64_t point_index(const Point& u) const;
  /// All q^m points in position order.
  std::vector<Point> points() const;

  Codeword codeword(std::uint64_t index) const;
  std::uint64_t codeword_index(const Codeword& c) const;
  /// All q^(m+1) codewords in index order.
  std::vector<Codeword> codewords() const;

  Elem evaluate(const Codeword& c, const Point& u) const;
  /// The literal length-n codeword.
  std::vector<Elem> expand(const Codeword& c) const;

  /// Number of nonzero positions, by scanning all q^m points.
  std::uint64_t weight(const Codeword& c) const;
  /// Weight from the enumerator's structure: 0, q^m or (q-1)q^(m-1).
  std::uint64_t weight_formula(const Codeword& c) const;
  /// Sorted positions where c is nonzero.
  std::vector<std::uint64_t> support(const Codeword& c) const;

  /// Codewords of weight exactly ell, in index order.
  std::vector<Codeword> shell(std::uint64_t ell) const;

  friend bool operator==(const GrmCode& a, const GrmCode& b) { return a.field_ == b.field_ && a.m_ == b.m_; }

 private:
  void check_point(const Point& u) const;

  Field field_;
  std::uint32_t m_;
  std::uint64_t n_;
  std::uint64_t size_;
};

GrmCode make_code(std::uint32_t p, std::uint32_t k, std::uint32_t m);

/// Ordered set of distinct coordinate positions (points of V).
class PointSet {
 public:
  PointSet() = default;
  /// Throws InputError on repeated points or wrong dimension.
  PointSet(const GrmCode& code, std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains_origin() const;

 private:
  std::vector<Point> points_;
};

PointSet point_set_from_indices(const GrmCode& code, std::span<const std::uint64_t> indices);

/// Distinguishes the two rank-2 polynomials for four points.
enum class Subcase : std::uint8_t {
  kNone,
  /// Normal form u3 = a u1 + b u2 with a + b = 1 or ab = 0: three of the
  /// four points are affinely collinear.
  kCollinearTriple,
  kGeneric,
};

/// Size, affine rank and (t = 4, rank 2 only) sub-case of a position set.
struct TClass {
  std::uint32_t t = 0;
  std::uint32_t rank = 0;
  Subcase subcase = Subcase::kNone;

  auto operator<=>(const TClass&) const = default;
  std::string name() const;
};

std::optional<TClass> parse_tclass(const std::string& name);

/// Classification of a translated 4-set in rank 2 with its normal-form scalars.
struct Rank2Normal {
  Elem a;
  Elem b;
  Subcase subcase = Subcase::kNone;
};

TClass classify_T(const GrmCode& code, const PointSet& T);

/// Normal-form scalars for a rank-2 4-set: the difference vectors from the
/// first point in V-order are permuted so that the first two are
/// independent, then u3 = a u1 + b u2 is solved.
Rank2Normal rank2_normal_form(const GrmCode& code, const PointSet& T);

/// Rank over F_q of the matrix whose rows are the given vectors.
std::uint32_t matrix_rank(const Field& field, std::vector<std::vector<Elem>> rows);

PointSet translate_T(const GrmCode& code, const PointSet& T, const Point& v);

/// T shifted so that its first point in V-order becomes the origin.
PointSet translate_to_origin(const GrmCode& code, const PointSet& T);

/// Every class allowed by the rank bound 0 <= rank <= min(t-1, m), in order.
std::vector<TClass> candidate_classes(std::uint32_t t, std::uint32_t m);

/// Parses "(0,1);(2,0)" into points; throws InputError on malformed text.
std::vector<Point> parse_points(const GrmCode& code, const std::string& text);
std::string format_point(const Point& u);

}  // namespace grm
