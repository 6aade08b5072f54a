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

// Affine regularity. A polygon P_0..P_{n-1} on a non-degenerate conic with
// P_{j+1}P_{j+2} || P_j P_{j+3} for every cyclic j is an affine image of the
// regular n-gon. Certification uses only that incidence/parallelism test;
// normalize_to_regular() is a floating-point diagnostic on top of it.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slopes/conic.hpp"
#include "slopes/geometry.hpp"

namespace slopes {

// (x, y) -> (a x + b y + e, c x + d y + f)
template <ScalarType S>
struct AffineMap {
  S a{1}, b{0}, c{0}, d{1};
  S e{0}, f{0};

  static AffineMap identity() { return {}; }

  static AffineMap make(S a, S b, S c, S d, S e, S f) {
    AffineMap m{std::move(a), std::move(b), std::move(c), std::move(d), std::move(e), std::move(f)};
    if (m.linear_det_is_zero())
      throw Error(ErrorKind::kNonInvertible, "affine map has a singular linear part");
    return m;
  }

  S det() const { return a * d - b * c; }

  bool linear_det_is_zero() const {
    if constexpr (is_exact_v<S>) {
      return det().is_zero();
    } else {
      return near_zero(det(), abs_value(a * d) + abs_value(b * c));
    }
  }

  Point<S> operator()(const Point<S>& p) const {
    return {a * p.x + b * p.y + e, c * p.x + d * p.y + f};
  }
};

template <ScalarType To, ScalarType From>
AffineMap<To> convert_map(const AffineMap<From>& m, double eps = kDefaultEps) {
  if constexpr (std::is_same_v<To, From>) {
    return m;
  } else if constexpr (is_exact_v<To>) {
    static_assert(!is_exact_v<To>, "cannot rationalize a floating-point map");
  } else {
    auto cv = [&](const From& v) { return Approx(to_double(v), eps); };
    return {cv(m.a), cv(m.b), cv(m.c), cv(m.d), cv(m.e), cv(m.f)};
  }
}

// Unique affine map with src[i] -> dst[i].
template <ScalarType S>
AffineMap<S> solve_affine_map(std::span<const Point<S>, 3> src, std::span<const Point<S>, 3> dst) {
  const Point<S> u1 = src[1] - src[0], u2 = src[2] - src[0];
  const Point<S> v1 = dst[1] - dst[0], v2 = dst[2] - dst[0];
  if (cross_vanishes(u1, u2)) throw Error(ErrorKind::kCollinearSource, "source triple is collinear");
  if (cross_vanishes(v1, v2))
    throw Error(ErrorKind::kNonInvertible, "destination triple is collinear");
  // L [u1 u2] = [v1 v2]  =>  L = V U^{-1}
  const S det = cross(u1, u2);
  const S i00 = u2.y / det, i01 = -u2.x / det;
  const S i10 = -u1.y / det, i11 = u1.x / det;
  AffineMap<S> m;
  m.a = v1.x * i00 + v2.x * i10;
  m.b = v1.x * i01 + v2.x * i11;
  m.c = v1.y * i00 + v2.y * i10;
  m.d = v1.y * i01 + v2.y * i11;
  m.e = dst[0].x - (m.a * src[0].x + m.b * src[0].y);
  m.f = dst[0].y - (m.c * src[0].x + m.d * src[0].y);
  return m;
}

struct ChainResult {
  bool holds = true;
  std::optional<std::size_t> first_failure;
  std::vector<std::size_t> failures;
};

// P_{j+1}P_{j+2} || P_j P_{j+3} for j = 0..n-1 (cyclic) or j = 0..n-4.
template <ScalarType S>
ChainResult korchmaros_chain(std::span<const Point<S>> pts, bool cyclic) {
  const std::size_t n = pts.size();
  if (n < 4) throw Error(ErrorKind::kTooFewPoints, "chain test needs at least four points");
  ChainResult r;
  const std::size_t last = cyclic ? n : n - 3;
  for (std::size_t j = 0; j < last; ++j) {
    const auto& p0 = pts[j];
    const auto& p1 = pts[(j + 1) % n];
    const auto& p2 = pts[(j + 2) % n];
    const auto& p3 = pts[(j + 3) % n];
    if (!parallel(p1, p2, p0, p3)) {
      if (r.holds) r.first_failure = j;
      r.holds = false;
      r.failures.push_back(j);
    }
  }
  return r;
}

template <ScalarType S>
struct RegularityCertificate {
  bool granted = false;
  std::string reason;  // empty when granted
  std::optional<Conic<S>> conic;
  bool chain_ok = false;
  std::optional<std::size_t> chain_failure;
  std::vector<std::size_t> order;  // convex order used, original indices
};

// Convex order, conic through the first five, every point on it, and the
// cyclic chain. Preconditions (n >= 5, general and convex position) throw.
template <ScalarType S>
RegularityCertificate<S> is_affinely_regular(const Configuration<S>& c) {
  if (c.size() < 5) throw Error(ErrorKind::kTooFewPoints, "regularity needs n >= 5");
  RegularityCertificate<S> cert;
  cert.order = convex_position_order(c);
  const Configuration<S> a = c.relabel(cert.order);
  cert.conic = conic_through_5<S>(a.points().first(5));
  if (cert.conic->is_degenerate()) {
    cert.reason = "conic through the first five points is degenerate";
    return cert;
  }
  for (std::size_t i = 5; i < a.size(); ++i)
    if (!cert.conic->contains(a[i])) {
      cert.reason = "point " + std::to_string(cert.order[i]) + " is off the conic";
      return cert;
    }
  const auto chain = korchmaros_chain<S>(a.points(), true);
  cert.chain_ok = chain.holds;
  cert.chain_failure = chain.first_failure;
  if (!chain.holds) {
    cert.reason = "chain fails at position " + std::to_string(*chain.first_failure);
    return cert;
  }
  cert.granted = true;
  return cert;
}

// Vertex k of the canonical regular m-gon: unit circumcircle, angle 2 pi k / m.
inline Point<Approx> regular_vertex(long long k, long long m, double eps = kDefaultEps) {
  const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
  return {Approx(std::cos(t), eps), Approx(std::sin(t), eps)};
}

struct Normalization {
  AffineMap<Approx> map;
  double residual = 0.0;  // max distance of mapped points from their targets
};

// Maps the first three points onto their target vertices of the regular
// m-gon and measures how far the remaining points land from theirs.
// `targets` defaults to 0, 1, 2, ...
inline Normalization normalize_to_regular(std::span<const Point<Approx>> pts, long long m,
                                          std::span<const long long> targets = {}) {
  if (pts.size() < 3) throw Error(ErrorKind::kTooFewPoints, "normalization needs three points");
  if (static_cast<long long>(pts.size()) > m)
    throw Error(ErrorKind::kInvalidSpec, "more points than polygon vertices");
  if (!targets.empty() && targets.size() != pts.size())
    throw Error(ErrorKind::kInvalidSpec, "one target vertex per point required");
  auto target = [&](std::size_t i) {
    return regular_vertex(targets.empty() ? static_cast<long long>(i) : targets[i], m);
  };
  const std::array<Point<Approx>, 3> src{pts[0], pts[1], pts[2]};
  const std::array<Point<Approx>, 3> dst{target(0), target(1), target(2)};
  Normalization out;
  out.map = solve_affine_map<Approx>(std::span<const Point<Approx>, 3>(src),
                                     std::span<const Point<Approx>, 3>(dst));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point<Approx> q = out.map(pts[i]);
    const Point<Approx> t = target(i);
    out.residual = std::max(out.residual, std::hypot(q.x.value() - t.x.value(),
                                                     q.y.value() - t.y.value()));
  }
  return out;
}

}  // namespace slopes
