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

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "slopes.hpp"

namespace slopes::testing {

using Q = Rational;
using P = Point<Rational>;
using PA = Point<Approx>;

inline P pt(long long x, long long y) { return {Q(x), Q(y)}; }

inline Configuration<Q> exact_config(std::initializer_list<std::pair<long long, long long>> xy) {
  std::vector<P> pts;
  for (auto [x, y] : xy) pts.push_back(pt(x, y));
  return Configuration<Q>(pts);
}

inline Configuration<Q> parabola_config(std::initializer_list<long long> ts) {
  std::vector<P> pts;
  for (long long t : ts) pts.push_back(pt(t, t * t));
  return Configuration<Q>(pts);
}

template <ScalarType S>
std::vector<Point<S>> points_of(const Configuration<S>& c) {
  return {c.points().begin(), c.points().end()};
}

inline double dist(const PA& p, double x, double y) {
  return std::hypot(p.x.value() - x, p.y.value() - y);
}

// Runs `f` and checks that it throws an Error of the given kind.
inline ::testing::AssertionResult throws_kind(const std::function<void()>& f, ErrorKind kind) {
  try {
    f();
  } catch (const Error& e) {
    if (e.kind() == kind) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure()
           << "threw " << error_kind_name(e.kind()) << ": " << e.what();
  }
  return ::testing::AssertionFailure() << "did not throw " << error_kind_name(kind);
}

// Random affine image of the unit circle's rational points, in convex order.
inline Configuration<Q> random_convex_rational(Rng& rng, std::size_t n) {
  for (;;) {
    std::vector<P> pts;
    for (std::size_t k = 0; k < n; ++k) {
      const Q s = random_rational(rng, 4, 40);
      const Q d = 1 + s * s;
      pts.push_back({(1 - s * s) / d, 2 * s / d});
    }
    const auto t = random_affine_map(rng);
    for (auto& p : pts) p = t(p);
    try {
      return to_convex_order(Configuration<Q>(pts));
    } catch (const Error&) {
    }
  }
}

}  // namespace slopes::testing
