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

// Input generators. Randomness comes from std::mt19937_64 (fully specified
// by the C++ standard) mapped to ranges with the portable helpers below,
// never through std::uniform_*_distribution, so a seed reproduces the same
// configuration on every conforming implementation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <variant>
#include <vector>

#include "slopes/geometry.hpp"
#include "slopes/regularity.hpp"

namespace slopes {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi] by rejection.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = Rng::max() - (Rng::max() % range + 1) % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return lo + static_cast<std::int64_t>(x % range);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Rational p/q with q in [1, max_den] and |p/q| <= bound.
inline Rational random_rational(Rng& rng, std::int64_t bound, std::int64_t max_den) {
  const std::int64_t q = uniform_int(rng, 1, max_den);
  const std::int64_t p = uniform_int(rng, -bound * q, bound * q);
  return Rational(p, q);
}

inline Configuration<Approx> regular_polygon(long long m, double eps = kDefaultEps) {
  if (m < 3) throw Error(ErrorKind::kMTooSmall, "regular polygon needs m >= 3");
  std::vector<Point<Approx>> pts;
  pts.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) pts.push_back(regular_vertex(k, m, eps));
  return Configuration<Approx>(std::move(pts), eps);
}

template <ScalarType S>
Configuration<S> delete_vertices(const Configuration<S>& c, std::span<const std::size_t> indices) {
  std::set<std::size_t> drop;
  for (std::size_t i : indices) {
    if (i >= c.size()) throw Error(ErrorKind::kIndexOutOfRange, "no such vertex", {i});
    drop.insert(i);
  }
  if (c.size() - drop.size() < 3)
    throw Error(ErrorKind::kTooFewRemaining, "fewer than three points would remain");
  std::vector<Point<S>> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!drop.count(i)) out.push_back(c[i]);
  return Configuration<S>(std::move(out), c.eps());
}

template <ScalarType S>
Configuration<S> delete_vertices(const Configuration<S>& c, std::initializer_list<std::size_t> idx) {
  return delete_vertices(c, std::span<const std::size_t>(idx.begin(), idx.size()));
}

template <ScalarType S>
Configuration<S> apply_affine(const Configuration<S>& c, const AffineMap<S>& t) {
  if (t.linear_det_is_zero()) throw Error(ErrorKind::kNonInvertible, "singular affine map");
  std::vector<Point<S>> out;
  out.reserve(c.size());
  for (const auto& p : c.points()) out.push_back(t(p));
  return Configuration<S>(std::move(out), c.eps());
}

// Exact inputs move by multiples of delta / kPerturbSteps.
inline constexpr std::int64_t kPerturbSteps = 1 << 20;

template <ScalarType S>
Configuration<S> perturb(const Configuration<S>& c, const S& delta, std::uint64_t seed) {
  if (delta < S(0)) throw Error(ErrorKind::kInvalidSpec, "perturbation must be non-negative");
  Rng rng(seed);
  auto offset = [&]() -> S {
    if constexpr (is_exact_v<S>) {
      return delta * Rational(uniform_int(rng, -kPerturbSteps, kPerturbSteps), kPerturbSteps);
    } else {
      return delta * S(2.0 * uniform_unit(rng) - 1.0);
    }
  };
  std::vector<Point<S>> out;
  out.reserve(c.size());
  for (const auto& p : c.points()) {
    const S dx = offset();
    const S dy = offset();
    out.push_back({p.x + dx, p.y + dy});
  }
  return Configuration<S>(std::move(out), c.eps());
}

inline constexpr int kGenerationRetries = 10000;

// n rational points, no three collinear, coordinates in [-bound, bound]
// with denominators <= max_den. Each point is redrawn up to
// kGenerationRetries times before giving up.
inline Configuration<Rational> random_general_position(std::size_t n, std::uint64_t seed,
                                                       std::int64_t bound = 100,
                                                       std::int64_t max_den = 1000) {
  if (n < 3) throw Error(ErrorKind::kTooFewPoints, "random configuration needs n >= 3");
  Rng rng(seed);
  std::vector<Point<Rational>> pts;
  while (pts.size() < n) {
    bool placed = false;
    for (int attempt = 0; attempt < kGenerationRetries && !placed; ++attempt) {
      Point<Rational> p{random_rational(rng, bound, max_den), random_rational(rng, bound, max_den)};
      bool ok = true;
      for (std::size_t i = 0; i < pts.size() && ok; ++i) {
        ok = !(pts[i] == p);
        for (std::size_t j = i + 1; j < pts.size() && ok; ++j) ok = orientation(pts[i], pts[j], p) != 0;
      }
      if (ok) {
        pts.push_back(std::move(p));
        placed = true;
      }
    }
    if (!placed) throw Error(ErrorKind::kGenerationExhausted, "could not place point");
  }
  return Configuration<Rational>(std::move(pts));
}

// Invertible rational affine map with entries p/q, |p| <= bound * q,
// q <= max_den.
inline AffineMap<Rational> random_affine_map(Rng& rng, std::int64_t bound = 3,
                                             std::int64_t max_den = 8) {
  for (;;) {
    AffineMap<Rational> m{random_rational(rng, bound, max_den), random_rational(rng, bound, max_den),
                          random_rational(rng, bound, max_den), random_rational(rng, bound, max_den),
                          random_rational(rng, bound, max_den), random_rational(rng, bound, max_den)};
    if (!m.det().is_zero()) return m;
  }
}

template <ScalarType To, ScalarType From>
Configuration<To> convert_configuration(const Configuration<From>& c, double eps) {
  if constexpr (std::is_same_v<To, From>) {
    return c;
  } else {
    static_assert(!is_exact_v<To>, "cannot rationalize floating-point input");
    std::vector<Point<Approx>> out;
    for (const auto& p : c.points())
      out.push_back({Approx(to_double(p.x), eps), Approx(to_double(p.y), eps)});
    return Configuration<Approx>(std::move(out), eps);
  }
}

// A configuration in either backend.
using AnyConfiguration = std::variant<Configuration<Rational>, Configuration<Approx>>;

// Generator pipeline. Steps run in order; the source step must come first.
struct RegularPolygonStep {
  long long m;
};
struct RandomGeneralPositionStep {
  std::size_t n;
  std::uint64_t seed;
  std::int64_t bound = 100;
  std::int64_t max_den = 1000;
};
struct DeleteVerticesStep {
  std::vector<std::size_t> indices;
};
struct AffineImageStep {
  std::variant<AffineMap<Rational>, AffineMap<Approx>> map;
};
struct PerturbStep {
  std::variant<Rational, Approx> delta;
  std::uint64_t seed;
};
using GeneratorStep = std::variant<RegularPolygonStep, RandomGeneralPositionStep,
                                   DeleteVerticesStep, AffineImageStep, PerturbStep>;

struct GeneratorSpec {
  std::vector<GeneratorStep> steps;
};

inline AnyConfiguration run_generator(const GeneratorSpec& spec, double eps = kDefaultEps) {
  if (spec.steps.empty()) throw Error(ErrorKind::kInvalidSpec, "empty generator pipeline");
  std::optional<AnyConfiguration> cur;
  auto as_approx = [&](const AnyConfiguration& c) {
    return std::visit(
        [&](const auto& cfg) {
          return convert_configuration<Approx>(cfg, eps);
        },
        c);
  };
  for (std::size_t s = 0; s < spec.steps.size(); ++s) {
    const auto& step = spec.steps[s];
    const bool source = std::holds_alternative<RegularPolygonStep>(step) ||
                        std::holds_alternative<RandomGeneralPositionStep>(step);
    if (source != (s == 0))
      throw Error(ErrorKind::kInvalidSpec, "exactly one source step, and it must come first");
    if (const auto* rp = std::get_if<RegularPolygonStep>(&step)) {
      cur = regular_polygon(rp->m, eps);
    } else if (const auto* rg = std::get_if<RandomGeneralPositionStep>(&step)) {
      cur = random_general_position(rg->n, rg->seed, rg->bound, rg->max_den);
    } else if (const auto* dv = std::get_if<DeleteVerticesStep>(&step)) {
      cur = std::visit([&](const auto& c) -> AnyConfiguration { return delete_vertices(c, dv->indices); },
                       *cur);
    } else if (const auto* af = std::get_if<AffineImageStep>(&step)) {
      if (const auto* exact = std::get_if<AffineMap<Rational>>(&af->map);
          exact && std::holds_alternative<Configuration<Rational>>(*cur)) {
        cur = apply_affine(std::get<Configuration<Rational>>(*cur), *exact);
      } else {
        const auto m = std::visit(
            [&](const auto& mm) { return convert_map<Approx>(mm, eps); }, af->map);
        cur = apply_affine(as_approx(*cur), m);
      }
    } else if (const auto* pt = std::get_if<PerturbStep>(&step)) {
      if (const auto* exact = std::get_if<Rational>(&pt->delta);
          exact && std::holds_alternative<Configuration<Rational>>(*cur)) {
        cur = perturb(std::get<Configuration<Rational>>(*cur), *exact, pt->seed);
      } else {
        const Approx d = std::visit([&](const auto& v) { return Approx(to_double(v), eps); }, pt->delta);
        cur = perturb(as_approx(*cur), d, pt->seed);
      }
    }
  }
  return *cur;
}

}  // namespace slopes
