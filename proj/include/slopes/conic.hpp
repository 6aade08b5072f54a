// Copyright 2026 The slopes Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Affine conics a x^2 + b xy + c y^2 + d x + e y + f = 0 and the group law
// induced by parallelism: with a base point O on a non-degenerate conic,
// P + Q is the point R of the conic with RO || PQ (PP meaning the tangent
// at P). All constructions use Vieta on a line through a known conic point,
// so the exact backend never leaves the rationals.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slopes/geometry.hpp"

namespace slopes {

namespace detail {

// Determinant by Gaussian elimination. Approx returns value and Hadamard
// bound (product of row norms) so callers can apply the tolerance.
template <ScalarType S, std::size_t N>
std::pair<S, S> determinant(std::array<std::array<S, N>, N> m) {
  S scale = S(1);
  if constexpr (!is_exact_v<S>) {
    for (const auto& row : m) {
      S sq = S(0);
      for (const auto& v : row) sq += v * v;
      scale = scale * sqrt_value(sq);
    }
  }
  S det = S(1);
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    if constexpr (is_exact_v<S>) {
      while (piv < N && m[piv][col].is_zero()) ++piv;
      if (piv == N) return {S(0), scale};
    } else {
      for (std::size_t r = col + 1; r < N; ++r)
        if (abs_value(m[r][col]) > abs_value(m[piv][col])) piv = r;
      if (m[piv][col].value() == 0.0) return {S(0), scale};
    }
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    for (std::size_t r = col + 1; r < N; ++r) {
      const S f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < N; ++k) m[r][k] = m[r][k] - f * m[col][k];
    }
  }
  return {det, scale};
}

template <ScalarType S>
std::array<S, 6> conic_row(const Point<S>& p) {
  return {p.x * p.x, p.x * p.y, p.y * p.y, p.x, p.y, S(1)};
}

// One-dimensional null space of a rank-5 5x6 system (full pivoting).
template <ScalarType S>
std::array<S, 6> nullspace_5x6(std::array<std::array<S, 6>, 5> m) {
  std::array<std::size_t, 6> cols{0, 1, 2, 3, 4, 5};
  S max_entry = S(0);
  if constexpr (!is_exact_v<S>)
    for (const auto& row : m)
      for (const auto& v : row) max_entry = std::max(max_entry, abs_value(v));

  for (std::size_t r = 0; r < 5; ++r) {
    std::size_t pr = r, pc = r;
    bool found = false;
    for (std::size_t i = r; i < 5; ++i)
      for (std::size_t j = r; j < 6; ++j) {
        if constexpr (is_exact_v<S>) {
          if (!found && !m[i][cols[j]].is_zero()) {
            pr = i, pc = j;
            found = true;
          }
        } else {
          if (!found || abs_value(m[i][cols[j]]) > abs_value(m[pr][cols[pc]])) {
            pr = i, pc = j;
            found = true;
          }
        }
      }
    bool singular = !found;
    if constexpr (!is_exact_v<S>)
      singular = singular || near_zero(m[pr][cols[pc]], max_entry);
    if (singular) throw Error(ErrorKind::kRankDeficient, "five-point system is rank deficient");
    std::swap(m[r], m[pr]);
    std::swap(cols[r], cols[pc]);
    const S inv = S(1) / m[r][cols[r]];
    for (std::size_t j = r; j < 6; ++j) m[r][cols[j]] = m[r][cols[j]] * inv;
    for (std::size_t i = 0; i < 5; ++i) {
      if (i == r) continue;
      const S f = m[i][cols[r]];
      for (std::size_t j = r; j < 6; ++j) m[i][cols[j]] = m[i][cols[j]] - f * m[r][cols[j]];
    }
  }
  // Free column cols[5] set to 1; pivot variables follow from the RREF.
  std::array<S, 6> v{};
  v[cols[5]] = S(1);
  for (std::size_t r = 0; r < 5; ++r) v[cols[r]] = -m[r][cols[5]];
  return v;
}

}  // namespace detail

template <ScalarType S>
class Conic {
 public:
  Conic() = default;

  // Normalizes; throws DegenerateInput if all coefficients vanish.
  explicit Conic(std::array<S, 6> coeffs) : k_(std::move(coeffs)) {
    normalize(k_);
    local_ = k_;
    classify();
  }

  // Floating-point predicates are evaluated in the frame u = frame * (x - origin)
  // (row-major 2x2), where `local` holds the coefficients in u. conic_through_5
  // passes the whitened frame of the fitted points.
  Conic(std::array<S, 6> coeffs, Point<S> origin, std::array<S, 4> frame, std::array<S, 6> local)
      : k_(std::move(coeffs)), local_(std::move(local)), origin_(std::move(origin)), frame_(std::move(frame)) {
    normalize(k_);
    normalize(local_);
    classify();
  }

  const std::array<S, 6>& coeffs() const { return k_; }
  const S& a() const { return k_[0]; }
  const S& b() const { return k_[1]; }
  const S& c() const { return k_[2]; }
  const S& d() const { return k_[3]; }
  const S& e() const { return k_[4]; }
  const S& f() const { return k_[5]; }
  bool is_degenerate() const { return degenerate_; }

  S evaluate(const Point<S>& p) const {
    return a() * p.x * p.x + b() * p.x * p.y + c() * p.y * p.y + d() * p.x + e() * p.y + f();
  }

  // Gradient of the quadratic form.
  Point<S> gradient(const Point<S>& p) const {
    return {S(2) * a() * p.x + b() * p.y + d(), b() * p.x + S(2) * c() * p.y + e()};
  }

  bool contains(const Point<S>& p) const {
    if constexpr (is_exact_v<S>) {
      return evaluate(p).is_zero();
    } else {
      // Bound each monomial by max(1, |u|, |v|)^degree so the scale never
      // collapses when the point sits at the frame origin.
      const S dx = p.x - origin_.x, dy = p.y - origin_.y;
      const S u = frame_[0] * dx + frame_[1] * dy, v = frame_[2] * dx + frame_[3] * dy;
      const S r = std::max({S(1), abs_value(u), abs_value(v)});
      const std::array<S, 6> mono{u * u, u * v, v * v, u, v, S(1)};
      const std::array<S, 6> reach{r * r, r * r, r * r, r, r, S(1)};
      S value = S(0), bound = S(0);
      for (std::size_t j = 0; j < 6; ++j) {
        value += local_[j] * mono[j];
        bound += abs_value(local_[j]) * reach[j];
      }
      return near_zero(value, bound);
    }
  }

  // det [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]] and the sum of the
  // magnitudes of its expansion terms.
  std::pair<S, S> matrix_determinant() const { return matrix_determinant(k_); }

  static std::pair<S, S> matrix_determinant(const std::array<S, 6>& k) {
    const S four(4);
    const auto& [a, b, c, d, e, f] = k;
    const std::array<S, 5> terms{a * c * f, -(a * e * e) / four, -(b * b * f) / four,
                                 (b * d * e) / four, -(c * d * d) / four};
    S det = S(0), scale = S(0);
    for (const auto& t : terms) {
      det += t;
      scale += abs_value(t);
    }
    return {det, scale};
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + to_string(k_[i]);
    return s + "]";
  }

  friend bool operator==(const Conic& l, const Conic& r) {
    for (std::size_t i = 0; i < 6; ++i)
      if (!same_value(l.k_[i], r.k_[i])) return false;
    return true;
  }

 private:
  // Singularity is invariant under the frame change; test it where the
  // coefficients are well scaled.
  void classify() {
    const auto [det, scale] = matrix_determinant(local_);
    degenerate_ = near_zero(det, scale);
  }

  static void normalize(std::array<S, 6>& k_) {
    if constexpr (is_exact_v<S>) {
      Integer l = 1;
      for (const auto& v : k_) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
      Integer g = 0;
      for (const auto& v : k_)
        g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(v * Rational(l)));
      if (g == 0) throw Error(ErrorKind::kDegenerateInput, "all conic coefficients are zero");
      for (auto& v : k_) v = v * Rational(l) / Rational(g);
      for (const auto& v : k_)
        if (!v.is_zero()) {
          if (v < 0)
            for (auto& w : k_) w = -w;
          break;
        }
    } else {
      S sq = S(0);
      for (const auto& v : k_) sq += v * v;
      const S len = sqrt_value(sq);
      if (len.value() == 0.0)
        throw Error(ErrorKind::kDegenerateInput, "all conic coefficients are zero");
      for (auto& v : k_) v = v / len;
      for (const auto& v : k_)
        if (std::abs(v.value()) > v.eps()) {
          if (v.value() < 0)
            for (auto& w : k_) w = -w;
          break;
        }
    }
  }

  std::array<S, 6> k_{};
  std::array<S, 6> local_{};
  Point<S> origin_{S(0), S(0)};
  std::array<S, 4> frame_{S(1), S(0), S(0), S(1)};
  bool degenerate_ = true;
};

// Unique conic through five points, no three collinear.
template <ScalarType S>
Conic<S> conic_through_5(std::span<const Point<S>> pts) {
  if (pts.size() != 5) throw Error(ErrorKind::kTooFewPoints, "need exactly five points");
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (pts[i] == pts[j]) throw Error(ErrorKind::kCollinearTriple, "repeated point", {i, j});
      for (std::size_t k = j + 1; k < 5; ++k)
        if (orientation(pts[i], pts[j], pts[k]) == 0)
          throw Error(ErrorKind::kCollinearTriple, "three of the five points are collinear",
                      {i, j, k});
    }

  if constexpr (is_exact_v<S>) {
    std::array<std::array<S, 6>, 5> m;
    for (std::size_t i = 0; i < 5; ++i) m[i] = detail::conic_row(pts[i]);
    return Conic<S>(detail::nullspace_5x6(m));
  } else {
    // Fit in a whitened frame (centroid at 0, unit covariance), where the
    // system is well conditioned even for thin affine images, then map back.
    S cx = S(0), cy = S(0);
    for (const auto& p : pts) {
      cx += p.x;
      cy += p.y;
    }
    cx = cx / S(5);
    cy = cy / S(5);
    S sxx = S(0), sxy = S(0), syy = S(0);
    for (const auto& p : pts) {
      sxx += (p.x - cx) * (p.x - cx);
      sxy += (p.x - cx) * (p.y - cy);
      syy += (p.y - cy) * (p.y - cy);
    }
    // Inverse Cholesky factor G of the covariance: u = G (x - c).
    const S l11 = sqrt_value(sxx / S(5));
    const S l21 = sxy / S(5) / l11;
    const S l22 = sqrt_value(std::max(syy / S(5) - l21 * l21, S(0)));
    if (l22.value() == 0.0) throw Error(ErrorKind::kCollinearTriple, "fitted points are collinear");
    const std::array<S, 4> g{S(1) / l11, S(0), -l21 / (l11 * l22), S(1) / l22};
    std::array<std::array<S, 6>, 5> m;
    for (std::size_t i = 0; i < 5; ++i) {
      const S dx = pts[i].x - cx, dy = pts[i].y - cy;
      m[i] = detail::conic_row(Point<S>{g[0] * dx + g[1] * dy, g[2] * dx + g[3] * dy});
    }
    const auto u = detail::nullspace_5x6(m);
    // Q(x) = d' M d + n' d + F with d = G (x - c); expand in x.
    const S two(2);
    const S m11 = u[0], m12 = u[1] / two, m22 = u[2];
    const S q11 = g[0] * (m11 * g[0] + m12 * g[2]) + g[2] * (m12 * g[0] + m22 * g[2]);
    const S q12 = g[0] * (m11 * g[1] + m12 * g[3]) + g[2] * (m12 * g[1] + m22 * g[3]);
    const S q22 = g[1] * (m11 * g[1] + m12 * g[3]) + g[3] * (m12 * g[1] + m22 * g[3]);
    const S n1 = g[0] * u[3] + g[2] * u[4], n2 = g[1] * u[3] + g[3] * u[4];
    const S d = n1 - two * (q11 * cx + q12 * cy);
    const S e = n2 - two * (q12 * cx + q22 * cy);
    const S f = q11 * cx * cx + two * q12 * cx * cy + q22 * cy * cy - n1 * cx - n2 * cy + u[5];
    return Conic<S>({q11, two * q12, q22, d, e, f}, Point<S>{cx, cy}, g, u);
  }
}

template <ScalarType S>
Conic<S> conic_through_5(const Point<S>& p1, const Point<S>& p2, const Point<S>& p3,
                         const Point<S>& p4, const Point<S>& p5) {
  const std::array<Point<S>, 5> pts{p1, p2, p3, p4, p5};
  return conic_through_5<S>(std::span<const Point<S>>(pts));
}

template <ScalarType S>
bool is_on_conic(const Conic<S>& k, const Point<S>& p) {
  return k.contains(p);
}

// Six points lie on one conic iff det of rows (x^2, xy, y^2, x, y, 1) is zero.
template <ScalarType S>
bool coconic_6(std::span<const Point<S>> pts) {
  if (pts.size() != 6) throw Error(ErrorKind::kTooFewPoints, "need exactly six points");
  std::array<std::array<S, 6>, 6> m;
  for (std::size_t i = 0; i < 6; ++i) m[i] = detail::conic_row(pts[i]);
  const auto [det, scale] = detail::determinant<S, 6>(m);
  return near_zero(det, scale);
}

template <ScalarType S>
S coconic_determinant(std::span<const Point<S>> pts) {
  if (pts.size() != 6) throw Error(ErrorKind::kTooFewPoints, "need exactly six points");
  std::array<std::array<S, 6>, 6> m;
  for (std::size_t i = 0; i < 6; ++i) m[i] = detail::conic_row(pts[i]);
  return detail::determinant<S, 6>(m).first;
}

template <ScalarType S>
Direction<S> tangent_direction(const Conic<S>& k, const Point<S>& p) {
  if (!k.contains(p)) throw Error(ErrorKind::kOperandOffConic, "tangent at a point off the conic");
  const Point<S> g = k.gradient(p);
  bool singular;
  if constexpr (is_exact_v<S>) {
    singular = g.x.is_zero() && g.y.is_zero();
  } else {
    // Compare against the size of the linear part at p.
    const S scale = abs_value(k.a()) + abs_value(k.b()) + abs_value(k.c());
    const S reach = abs_value(p.x) + abs_value(p.y) + S(1);
    singular = near_zero(norm(g), scale * reach + abs_value(k.d()) + abs_value(k.e()));
  }
  if (singular) throw Error(ErrorKind::kSingularPoint, "gradient vanishes: degenerate conic");
  return Direction<S>::from_vector({g.y, -g.x});
}

// The other intersection of the conic with the line through p in direction
// d; p itself when the line is tangent there.
template <ScalarType S>
Point<S> second_intersection(const Conic<S>& k, const Point<S>& p, const Direction<S>& d) {
  if (!k.contains(p)) throw Error(ErrorKind::kOperandOffConic, "line base point is off the conic");
  const Point<S> v = d.vector();
  const Point<S> g = k.gradient(p);
  // Q(p + s v) = s (g . v) + s^2 quad
  const S linear = dot(g, v);
  const S quad = k.a() * v.x * v.x + k.b() * v.x * v.y + k.c() * v.y * v.y;
  const S vv = dot(v, v);
  const S quad_scale = (abs_value(k.a()) + abs_value(k.b()) + abs_value(k.c())) * vv;
  const bool tangent = near_zero(linear, norm(g) * norm(v));
  const bool asymptotic = near_zero(quad, quad_scale);
  if (tangent && asymptotic)
    throw Error(ErrorKind::kDegenerateConic, "line is contained in the conic");
  if (tangent) return p;
  if (asymptotic)
    throw Error(ErrorKind::kNoSecondIntersection, "line meets the conic only once");
  const S s = -linear / quad;
  return {p.x + s * v.x, p.y + s * v.y};
}

// Group on a non-degenerate conic with identity `base`.
template <ScalarType S>
class ConicGroup {
 public:
  ConicGroup(Conic<S> conic, Point<S> base) : conic_(std::move(conic)), base_(std::move(base)) {
    if (conic_.is_degenerate())
      throw Error(ErrorKind::kDegenerateConic, "group law needs a non-degenerate conic");
    if (!conic_.contains(base_))
      throw Error(ErrorKind::kOperandOffConic, "base point is not on the conic");
  }

  const Conic<S>& conic() const { return conic_; }
  const Point<S>& identity() const { return base_; }

  Point<S> add(const Point<S>& p, const Point<S>& q) const {
    require_on(p);
    require_on(q);
    const Direction<S> chord = p == q ? tangent_direction(conic_, p) : direction(p, q);
    return second_intersection(conic_, base_, chord);
  }

  Point<S> neg(const Point<S>& p) const {
    require_on(p);
    return second_intersection(conic_, p, tangent_direction(conic_, base_));
  }

  Point<S> sub(const Point<S>& p, const Point<S>& q) const { return add(p, neg(q)); }

  Point<S> scalar_mul(long long k, const Point<S>& p) const {
    require_on(p);
    if (k < 0) return neg(scalar_mul(-k, p));
    Point<S> acc = base_;
    Point<S> pow = p;
    for (auto m = static_cast<unsigned long long>(k); m != 0; m >>= 1) {
      if (m & 1ULL) acc = add(acc, pow);
      if (m > 1) pow = add(pow, pow);
    }
    return acc;
  }

 private:
  void require_on(const Point<S>& p) const {
    if (!conic_.contains(p)) throw Error(ErrorKind::kOperandOffConic, "operand is not on the conic");
  }

  Conic<S> conic_;
  Point<S> base_;
};

template <ScalarType S>
Point<S> group_add(const ConicGroup<S>& g, const Point<S>& p, const Point<S>& q) {
  return g.add(p, q);
}
template <ScalarType S>
Point<S> group_neg(const ConicGroup<S>& g, const Point<S>& p) {
  return g.neg(p);
}
template <ScalarType S>
Point<S> group_scalar_mul(const ConicGroup<S>& g, long long k, const Point<S>& p) {
  return g.scalar_mul(k, p);
}

// Outcome of checking the three chord parallelisms
//   P1P6 || P2P5,  P2P3 || P1P4,  P4P5 || P3P6
// on six points. When they all hold the six points must be coconic; a
// non-coconic Applicable result is a lemma violation.
struct PascalVerdict {
  bool applicable = false;
  int failed_condition = -1;  // 0, 1, 2 when not applicable
  bool coconic = false;

  bool lemma_violation() const { return applicable && !coconic; }
};

template <ScalarType S>
PascalVerdict pascal_parallel_coconic(std::span<const Point<S>> pts) {
  if (pts.size() != 6) throw Error(ErrorKind::kDegenerateInput, "need exactly six points");
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (pts[i] == pts[j]) throw Error(ErrorKind::kDegenerateInput, "repeated point", {i, j});
      for (std::size_t k = j + 1; k < 6; ++k)
        if (orientation(pts[i], pts[j], pts[k]) == 0)
          throw Error(ErrorKind::kDegenerateInput, "collinear triple", {i, j, k});
    }
  const auto& P = pts;
  const std::array<bool, 3> holds{parallel(P[0], P[5], P[1], P[4]),
                                  parallel(P[1], P[2], P[0], P[3]),
                                  parallel(P[3], P[4], P[2], P[5])};
  for (int c = 0; c < 3; ++c)
    if (!holds[c]) return {false, c, false};
  return {true, -1, coconic_6(pts)};
}

}  // namespace slopes
