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

// Points, directions and the orientation/position predicates.
//
// Tolerance rule for the Approx backend: two vectors u, v are parallel iff
// |u x v| <= eps * |u| |v|, i.e. the sine of the angle between them is
// below eps. The same rule decides collinearity of three points. Scalar
// coordinates are compared with the per-value rule in scalar.hpp.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slopes/error.hpp"
#include "slopes/scalar.hpp"

namespace slopes {

template <ScalarType S>
struct Point {
  S x{};
  S y{};

  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const S& k, const Point& p) { return {k * p.x, k * p.y}; }

  // Exact equality, or coordinate-wise tolerance equality.
  friend bool operator==(const Point& a, const Point& b) {
    return same_value(a.x, b.x) && same_value(a.y, b.y);
  }
};

template <ScalarType S>
S cross(const Point<S>& u, const Point<S>& v) {
  return u.x * v.y - u.y * v.x;
}

template <ScalarType S>
S dot(const Point<S>& u, const Point<S>& v) {
  return u.x * v.x + u.y * v.y;
}

template <ScalarType S>
S norm(const Point<S>& u) {
  if constexpr (is_exact_v<S>) {
    return dot(u, u);  // only used as a scale; exact tests ignore it
  } else {
    return sqrt_value(dot(u, u));
  }
}

// u x v == 0 under the backend's rule.
template <ScalarType S>
bool cross_vanishes(const Point<S>& u, const Point<S>& v) {
  if constexpr (is_exact_v<S>) {
    return cross(u, v).is_zero();
  } else {
    return near_zero(cross(u, v), norm(u) * norm(v));
  }
}

template <ScalarType S>
int orientation(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
  const Point<S> u = q - p;
  const Point<S> v = r - p;
  if (cross_vanishes(u, v)) return 0;
  return sign_of(cross(u, v));
}

// Segments PQ and RS are parallel (or either is degenerate).
template <ScalarType S>
bool parallel(const Point<S>& p, const Point<S>& q, const Point<S>& r, const Point<S>& s) {
  return cross_vanishes(q - p, s - r);
}

// Canonical representative of a parallelism class.
//
// Exact: primitive integer pair with dx > 0, or dx == 0 and dy > 0.
// Approx: unit vector with angle in [0, pi), i.e. dy > 0, or dy == 0 and dx > 0.
template <ScalarType S>
class Direction {
 public:
  Direction() = default;

  static Direction from_vector(const Point<S>& v) {
    if constexpr (is_exact_v<S>) {
      if (v.x.is_zero() && v.y.is_zero())
        throw Error(ErrorKind::kCoincidentPoints, "zero direction vector");
      const Integer lx = boost::multiprecision::denominator(v.x);
      const Integer ly = boost::multiprecision::denominator(v.y);
      const Integer l = boost::multiprecision::lcm(lx, ly);
      Integer ix = boost::multiprecision::numerator(v.x) * (l / lx);
      Integer iy = boost::multiprecision::numerator(v.y) * (l / ly);
      const Integer g = boost::multiprecision::gcd(ix, iy);
      ix /= g;
      iy /= g;
      if (ix < 0 || (ix == 0 && iy < 0)) {
        ix = -ix;
        iy = -iy;
      }
      return Direction(Rational(ix), Rational(iy));
    } else {
      const double len = std::hypot(v.x.value(), v.y.value());
      if (len == 0.0) throw Error(ErrorKind::kCoincidentPoints, "zero direction vector");
      const double eps = std::max(v.x.raw_eps(), v.y.raw_eps());
      double dx = v.x.value() / len;
      double dy = v.y.value() / len;
      if (dy < 0 || (dy == 0 && dx < 0)) {
        dx = -dx;
        dy = -dy;
      }
      return Direction(S(dx, eps), S(dy, eps));
    }
  }

  const S& dx() const { return dx_; }
  const S& dy() const { return dy_; }
  Point<S> vector() const { return {dx_, dy_}; }

  // Angle in [0, pi).
  double angle() const {
    double a = std::atan2(to_double(dy_), to_double(dx_));
    if (a < 0) a += std::numbers::pi;
    if (a >= std::numbers::pi) a -= std::numbers::pi;
    return a;
  }

  bool parallel_to(const Direction& o) const { return cross_vanishes(vector(), o.vector()); }
  friend bool operator==(const Direction& a, const Direction& b) { return a.parallel_to(b); }

  // Deterministic class order: lexicographic (dx, dy) exact, by angle approx.
  friend bool canonical_less(const Direction& a, const Direction& b) {
    if constexpr (is_exact_v<S>) {
      if (a.dx_ != b.dx_) return a.dx_ < b.dx_;
      return a.dy_ < b.dy_;
    } else {
      return a.angle() < b.angle();
    }
  }

  std::string str() const { return "(" + to_string(dx_) + "," + to_string(dy_) + ")"; }

 private:
  Direction(S dx, S dy) : dx_(std::move(dx)), dy_(std::move(dy)) {}
  S dx_{};
  S dy_{};
};

template <ScalarType S>
Direction<S> direction(const Point<S>& p, const Point<S>& q) {
  if (p == q) throw Error(ErrorKind::kCoincidentPoints, "direction of a degenerate segment");
  return Direction<S>::from_vector(q - p);
}

struct GeneralPositionResult {
  bool general = true;
  std::optional<std::array<std::size_t, 3>> witness;  // first collinear triple, lexicographic
};

template <ScalarType S>
GeneralPositionResult general_position(std::span<const Point<S>> pts) {
  if (pts.size() < 3) throw Error(ErrorKind::kTooFewPoints, "general position needs n >= 3");
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orientation(pts[i], pts[j], pts[k]) == 0)
          return {false, std::array<std::size_t, 3>{i, j, k}};
  return {};
}

// An immutable, indexed set of pairwise distinct points. Position flags are
// computed once at construction.
template <ScalarType S>
class Configuration {
 public:
  using scalar_type = S;

  Configuration() = default;

  explicit Configuration(std::vector<Point<S>> points, double eps = kDefaultEps)
      : points_(std::move(points)), eps_(eps) {
    if constexpr (!is_exact_v<S>) {
      for (auto& p : points_) p = {with_eps(p.x, eps_), with_eps(p.y, eps_)};
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j)
        if (points_[i] == points_[j])
          throw Error(ErrorKind::kDuplicatePoint,
                      "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide",
                      {i, j});
    if (points_.size() >= 3) gp_ = general_position<S>(points_);
  }

  std::size_t size() const { return points_.size(); }
  const Point<S>& operator[](std::size_t i) const { return points_[i]; }
  // Cyclic access, any integer index.
  const Point<S>& at_cyclic(long long i) const {
    const auto n = static_cast<long long>(points_.size());
    return points_[static_cast<std::size_t>(((i % n) + n) % n)];
  }
  std::span<const Point<S>> points() const { return points_; }
  double eps() const { return eps_; }
  static constexpr Backend backend() { return backend_of<S>(); }

  bool is_general_position() const { return gp_.general; }
  const GeneralPositionResult& general_position_result() const { return gp_; }

  // Same points, relabeled: result[k] = (*this)[order[k]].
  Configuration relabel(std::span<const std::size_t> order) const {
    std::vector<Point<S>> out;
    out.reserve(order.size());
    for (std::size_t i : order) out.push_back(points_.at(i));
    return Configuration(std::move(out), eps_);
  }

 private:
  std::vector<Point<S>> points_;
  double eps_ = kDefaultEps;
  GeneralPositionResult gp_;
};

template <ScalarType S>
GeneralPositionResult is_general_position(const Configuration<S>& c) {
  if (c.size() < 3) throw Error(ErrorKind::kTooFewPoints, "general position needs n >= 3");
  return c.general_position_result();
}

namespace detail {

template <ScalarType S>
bool lex_less(const Point<S>& a, const Point<S>& b) {
  if (a.x < b.x) return true;
  if (b.x < a.x) return false;
  return a.y < b.y;
}

}  // namespace detail

// Counterclockwise convex order starting at the lexicographically smallest
// point. Throws NotConvexPosition carrying the lowest index that is not a
// hull vertex.
template <ScalarType S>
std::vector<std::size_t> convex_position_order(const Configuration<S>& c) {
  const std::size_t n = c.size();
  if (n < 3) throw Error(ErrorKind::kTooFewPoints, "convex order needs n >= 3");
  if (!c.is_general_position()) {
    const auto& w = *c.general_position_result().witness;
    throw Error(ErrorKind::kCollinearTriple, "configuration is not in general position",
                {w[0], w[1], w[2]});
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return detail::lex_less(c[a], c[b]); });

  // Andrew's monotone chain.
  std::vector<std::size_t> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orientation(c[hull[k - 2]], c[hull[k - 1]], c[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orientation(c[hull[k - 2]], c[hull[k - 1]], c[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  hull.resize(k - 1);

  if (hull.size() != n) {
    std::vector<bool> on_hull(n, false);
    for (std::size_t h : hull) on_hull[h] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!on_hull[i])
        throw Error(ErrorKind::kNotConvexPosition,
                    "point " + std::to_string(i) + " lies strictly inside the hull", {i});
  }
  return hull;
}

template <ScalarType S>
Configuration<S> to_convex_order(const Configuration<S>& c) {
  const auto order = convex_position_order(c);
  return c.relabel(order);
}

}  // namespace slopes
