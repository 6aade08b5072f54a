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

// Brute-force reference computations for tests. Nothing here calls into the
// code paths it is used to check: no Direction canonicalization, no
// Gaussian elimination, no group law.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "slopes/generators.hpp"
#include "slopes/geometry.hpp"

namespace slopes::oracle {

// Number of parallelism classes by pairwise cross products, O(n^4).
inline std::size_t slope_count(const std::vector<std::array<Rational, 2>>& pts) {
  std::vector<std::array<Rational, 2>> reps;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Rational dx = pts[j][0] - pts[i][0], dy = pts[j][1] - pts[i][1];
      bool seen = false;
      for (const auto& r : reps)
        if (dx * r[1] - dy * r[0] == 0) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back({dx, dy});
    }
  return reps.size();
}

inline std::vector<std::array<Rational, 2>> raw(const Configuration<Rational>& c) {
  std::vector<std::array<Rational, 2>> out;
  for (const auto& p : c.points()) out.push_back({p.x, p.y});
  return out;
}

// Laplace expansion along the first row.
inline Rational laplace_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][col] * laplace_det(minor);
    det += (col % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

inline Rational coconic_det(const std::vector<std::array<Rational, 2>>& pts) {
  std::vector<std::vector<Rational>> m;
  for (const auto& p : pts)
    m.push_back({p[0] * p[0], p[0] * p[1], p[1] * p[1], p[0], p[1], Rational(1)});
  return laplace_det(m);
}

// Parabola y = x^2 parameterized by t; the group with O = (0,0) is t-addition.
inline Point<Rational> parabola(const Rational& t) { return {t, t * t}; }

// Rational points on the unit circle, s -> ((1-s^2)/(1+s^2), 2s/(1+s^2)).
inline Point<Rational> circle(const Rational& s) {
  const Rational d = 1 + s * s;
  return {(1 - s * s) / d, 2 * s / d};
}

// Unit-circle points as unit complex numbers; with O = (1,0) the group is
// complex multiplication.
inline Point<Rational> complex_mul(const Point<Rational>& a, const Point<Rational>& b) {
  return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}
inline Point<Rational> complex_conj(const Point<Rational>& a) { return {a.x, -a.y}; }

// Quadratic form value, expanded by hand.
inline Rational conic_value(const std::array<Rational, 6>& k, const Point<Rational>& p) {
  return k[0] * p.x * p.x + k[1] * p.x * p.y + k[2] * p.y * p.y + k[3] * p.x + k[4] * p.y + k[5];
}

}  // namespace slopes::oracle
