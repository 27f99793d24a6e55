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

#include "grm/code.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

namespace grm {

bool Codeword::is_constant() const {
  return std::all_of(lambda.begin(), lambda.end(), [](Elem e) { return e.index == 0; });
}

GrmCode::GrmCode(Field field, std::uint32_t m) : field_(std::move(field)), m_(m) {
  if (m < 1) throw InputError("dimension m must be >= 1");
  n_ = ipow(field_.q(), m);
  size_ = ipow(field_.q(), m + 1ULL);
}

GrmCode make_code(std::uint32_t p, std::uint32_t k, std::uint32_t m) { return GrmCode(Field::make(p, k), m); }

Point GrmCode::point(std::uint64_t index) const {
  if (index >= n_) throw InputError("point index out of range");
  Point u(m_);
  for (std::uint32_t i = m_; i-- > 0;) {
    u[i] = Elem{static_cast<std::uint32_t>(index % q())};
    index /= q();
  }
  return u;
}

void GrmCode::check_point(const Point& u) const {
  if (u.size() != m_) throw InputError("point has " + std::to_string(u.size()) + " coordinates, expected " + std::to_string(m_));
  for (Elem e : u) {
    if (e.index >= q()) throw InputError("point coordinate " + std::to_string(e.index) + " outside F_" + std::to_string(q()));
  }
}

std::uint64_t GrmCode::point_index(const Point& u) const {
  check_point(u);
  std::uint64_t idx = 0;
  for (Elem e : u) idx = idx * q() + e.index;
  return idx;
}

std::vector<Point> GrmCode::points() const {
  std::vector<Point> out;
  out.reserve(n_);
  for (std::uint64_t i = 0; i < n_; ++i) out.push_back(point(i));
  return out;
}

Codeword GrmCode::codeword(std::uint64_t index) const {
  if (index >= size_) throw InputError("codeword index out of range");
  Codeword c;
  c.b = Elem{static_cast<std::uint32_t>(index % q())};
  c.lambda = point(index / q());
  return c;
}

std::uint64_t GrmCode::codeword_index(const Codeword& c) const {
  return point_index(c.lambda) * q() + field_.element(c.b.index).index;
}

std::vector<Codeword> GrmCode::codewords() const {
  std::vector<Codeword> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(codeword(i));
  return out;
}

Elem GrmCode::evaluate(const Codeword& c, const Point& u) const {
  Elem acc = c.b;
  for (std::uint32_t i = 0; i < m_; ++i) acc = field_.add(acc, field_.mul(c.lambda[i], u[i]));
  return acc;
}

std::vector<Elem> GrmCode::expand(const Codeword& c) const {
  std::vector<Elem> out;
  out.reserve(n_);
  for (std::uint64_t i = 0; i < n_; ++i) out.push_back(evaluate(c, point(i)));
  return out;
}

std::uint64_t GrmCode::weight(const Codeword& c) const {
  std::uint64_t w = 0;
  for (std::uint64_t i = 0; i < n_; ++i) w += evaluate(c, point(i)).index != 0;
  return w;
}

std::uint64_t GrmCode::weight_formula(const Codeword& c) const {
  if (!c.is_constant()) return middle_weight();
  return c.b.index == 0 ? 0 : n_;
}

std::vector<std::uint64_t> GrmCode::support(const Codeword& c) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < n_; ++i) {
    if (evaluate(c, point(i)).index != 0) out.push_back(i);
  }
  return out;
}

std::vector<Codeword> GrmCode::shell(std::uint64_t ell) const {
  std::vector<Codeword> out;
  for (std::uint64_t i = 0; i < size_; ++i) {
    Codeword c = codeword(i);
    if (weight_formula(c) == ell) out.push_back(std::move(c));
  }
  return out;
}

PointSet::PointSet(const GrmCode& code, std::vector<Point> points) : points_(std::move(points)) {
  std::set<std::uint64_t> seen;
  for (const auto& u : points_) {
    if (!seen.insert(code.point_index(u)).second) throw InputError("repeated point " + format_point(u));
  }
}

bool PointSet::contains_origin() const {
  return std::any_of(points_.begin(), points_.end(), [](const Point& u) {
    return std::all_of(u.begin(), u.end(), [](Elem e) { return e.index == 0; });
  });
}

PointSet point_set_from_indices(const GrmCode& code, std::span<const std::uint64_t> indices) {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (auto i : indices) pts.push_back(code.point(i));
  return PointSet(code, std::move(pts));
}

std::string TClass::name() const {
  std::string s = "t" + std::to_string(t) + "-rank" + std::to_string(rank);
  if (subcase == Subcase::kCollinearTriple) s += "-collinear";
  if (subcase == Subcase::kGeneric) s += "-generic";
  return s;
}

std::optional<TClass> parse_tclass(const std::string& name) {
  for (std::uint32_t t = 2; t <= 4; ++t) {
    for (std::uint32_t rank = 1; rank < t; ++rank) {
      for (Subcase s : {Subcase::kNone, Subcase::kCollinearTriple, Subcase::kGeneric}) {
        TClass c{t, rank, s};
        if (c.name() == name) return c;
      }
    }
  }
  return std::nullopt;
}

std::uint32_t matrix_rank(const Field& f, std::vector<std::vector<Elem>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::uint32_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].index == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Elem scale = f.inv(rows[rank][col]);
    for (auto& e : rows[rank]) e = f.mul(e, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].index == 0) continue;
      const Elem factor = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

namespace {

Point sub_point(const Field& f, const Point& a, const Point& b) {
  Point d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = f.sub(a[i], b[i]);
  return d;
}

std::size_t base_position(const GrmCode& code, const PointSet& T) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < T.size(); ++i) {
    if (code.point_index(T[i]) < code.point_index(T[best])) best = i;
  }
  return best;
}

std::vector<Point> differences(const GrmCode& code, const PointSet& T) {
  const std::size_t base = base_position(code, T);
  std::vector<Point> diffs;
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (i != base) diffs.push_back(sub_point(code.field(), T[i], T[base]));
  }
  return diffs;
}

}  // namespace

Rank2Normal rank2_normal_form(const GrmCode& code, const PointSet& T) {
  const Field& f = code.field();
  if (T.size() != 4) throw InputError("normal form needs exactly four points");
  const auto d = differences(code, T);
  static constexpr std::array<std::array<int, 3>, 3> kOrders{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& ord : kOrders) {
    const Point& u1 = d[ord[0]];
    const Point& u2 = d[ord[1]];
    const Point& u3 = d[ord[2]];
    if (matrix_rank(f, {u1, u2}) != 2) continue;
    // Two coordinates on which u1, u2 are independent, then Cramer's rule.
    for (std::uint32_t r = 0; r < code.m(); ++r) {
      for (std::uint32_t s = r + 1; s < code.m(); ++s) {
        const Elem det = f.sub(f.mul(u1[r], u2[s]), f.mul(u2[r], u1[s]));
        if (det.index == 0) continue;
        const Elem det_inv = f.inv(det);
        const Elem a = f.mul(f.sub(f.mul(u3[r], u2[s]), f.mul(u2[r], u3[s])), det_inv);
        const Elem b = f.mul(f.sub(f.mul(u1[r], u3[s]), f.mul(u3[r], u1[s])), det_inv);
        for (std::uint32_t i = 0; i < code.m(); ++i) {
          if (f.add(f.mul(a, u1[i]), f.mul(b, u2[i])) != u3[i]) throw InputError("four points do not span an affine plane");
        }
        const bool collinear = f.add(a, b) == f.one() || f.mul(a, b).index == 0;
        return Rank2Normal{a, b, collinear ? Subcase::kCollinearTriple : Subcase::kGeneric};
      }
    }
  }
  throw InputError("four points do not have affine rank 2");
}

TClass classify_T(const GrmCode& code, const PointSet& T) {
  if (T.size() < 2 || T.size() > 4) throw InputError("classification needs 2 to 4 points, got " + std::to_string(T.size()));
  const auto d = differences(code, T);
  TClass c;
  c.t = static_cast<std::uint32_t>(T.size());
  c.rank = matrix_rank(code.field(), {d.begin(), d.end()});
  if (c.t == 4 && c.rank == 2) c.subcase = rank2_normal_form(code, T).subcase;
  return c;
}

PointSet translate_T(const GrmCode& code, const PointSet& T, const Point& v) {
  code.point_index(v);
  std::vector<Point> pts;
  pts.reserve(T.size());
  for (const auto& u : T) {
    Point s(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) s[i] = code.field().add(u[i], v[i]);
    pts.push_back(std::move(s));
  }
  return PointSet(code, std::move(pts));
}

PointSet translate_to_origin(const GrmCode& code, const PointSet& T) {
  if (T.empty()) return T;
  const Point& base = T[base_position(code, T)];
  Point shift(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) shift[i] = code.field().neg(base[i]);
  return translate_T(code, T, shift);
}

std::vector<TClass> candidate_classes(std::uint32_t t, std::uint32_t m) {
  std::vector<TClass> out;
  const std::uint32_t max_rank = std::min(t - 1, m);
  for (std::uint32_t rank = max_rank; rank >= 1; --rank) {
    if (t == 4 && rank == 2) {
      out.push_back({t, rank, Subcase::kCollinearTriple});
      out.push_back({t, rank, Subcase::kGeneric});
    } else {
      out.push_back({t, rank, Subcase::kNone});
    }
  }
  return out;
}

std::vector<Point> parse_points(const GrmCode& code, const std::string& text) {
  std::vector<Point> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return out;
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') throw InputError("expected '(' in point list at offset " + std::to_string(pos));
    ++pos;
    Point u;
    while (true) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw InputError("expected element index at offset " + std::to_string(start));
      const unsigned long v = std::stoul(text.substr(start, pos - start));
      if (v >= code.q()) throw InputError("element index " + std::to_string(v) + " outside F_" + std::to_string(code.q()));
      u.push_back(Elem{static_cast<std::uint32_t>(v)});
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw InputError("expected ',' or ')' at offset " + std::to_string(pos));
    }
    if (u.size() != code.m()) throw InputError("point " + format_point(u) + " does not have " + std::to_string(code.m()) + " coordinates");
    out.push_back(std::move(u));
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ';') throw InputError("expected ';' between points at offset " + std::to_string(pos));
    ++pos;
  }
  return out;
}

std::string format_point(const Point& u) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < u.size(); ++i) os << (i ? "," : "") << u[i].index;
  os << ')';
  return os.str();
}

}  // namespace grm
