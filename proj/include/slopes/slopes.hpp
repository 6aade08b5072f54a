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

// Slope spectra: the partition of all point pairs of a configuration into
// parallelism classes, forbidden slopes per point, and the dichotomy for a
// convex polygon between "slope of A_i A_k is forbidden at A_j" and "some
// A_j A_p with i < p < k is parallel to A_i A_k".

#include <algorithm>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "slopes/geometry.hpp"

namespace slopes {

using IndexPair = std::pair<std::size_t, std::size_t>;

template <ScalarType S>
struct SlopeClass {
  Direction<S> direction;
  std::vector<IndexPair> pairs;  // i < j, lexicographic
};

template <ScalarType S>
class SlopeSpectrum {
 public:
  SlopeSpectrum(std::size_t n, std::vector<SlopeClass<S>> classes)
      : n_(n), classes_(std::move(classes)), class_of_(n * n, kNone) {
    for (std::size_t c = 0; c < classes_.size(); ++c)
      for (const auto& [i, j] : classes_[c].pairs) {
        class_of_[i * n_ + j] = c;
        class_of_[j * n_ + i] = c;
      }
  }

  std::size_t count() const { return classes_.size(); }
  std::size_t points() const { return n_; }
  const std::vector<SlopeClass<S>>& classes() const { return classes_; }
  const SlopeClass<S>& operator[](std::size_t c) const { return classes_[c]; }

  // Class index of segment (i, j), i != j.
  std::size_t class_of(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_ || i == j) throw Error(ErrorKind::kIndexOutOfRange, "bad pair");
    return class_of_[i * n_ + j];
  }

  // Index of the class parallel to d, if the spectrum has one.
  std::optional<std::size_t> find(const Direction<S>& d) const {
    for (std::size_t c = 0; c < classes_.size(); ++c)
      if (classes_[c].direction.parallel_to(d)) return c;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t n_;
  std::vector<SlopeClass<S>> classes_;
  std::vector<std::size_t> class_of_;
};

template <ScalarType S>
SlopeSpectrum<S> slope_spectrum(const Configuration<S>& c) {
  const std::size_t n = c.size();
  if (n < 2) throw Error(ErrorKind::kTooFewPoints, "slope spectrum needs n >= 2");

  struct Entry {
    Direction<S> dir;
    double angle;
    IndexPair pair;
  };
  std::vector<Entry> entries;
  entries.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto d = direction(c[i], c[j]);
      const double a = is_exact_v<S> ? 0.0 : d.angle();
      entries.push_back({std::move(d), a, {i, j}});
    }

  std::vector<SlopeClass<S>> classes;
  if constexpr (is_exact_v<S>) {
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      return canonical_less(a.dir, b.dir);
    });
    for (auto& e : entries) {
      if (classes.empty() || !(classes.back().direction.dx() == e.dir.dx() &&
                               classes.back().direction.dy() == e.dir.dy()))
        classes.push_back({e.dir, {}});
      classes.back().pairs.push_back(e.pair);
    }
  } else {
    // Sort by angle, merge neighbours within eps radians, then close the
    // pi/0 seam.
    const double eps = c.eps();
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.angle < b.angle; });
    double last = 0.0;
    for (auto& e : entries) {
      if (classes.empty() || e.angle - last > eps) classes.push_back({e.dir, {}});
      classes.back().pairs.push_back(e.pair);
      last = e.angle;
    }
    if (classes.size() > 1 && entries.front().angle + std::numbers::pi - last <= eps) {
      auto& first = classes.front().pairs;
      first.insert(first.end(), classes.back().pairs.begin(), classes.back().pairs.end());
      classes.pop_back();
    }
  }
  for (auto& cl : classes) std::sort(cl.pairs.begin(), cl.pairs.end());
  return SlopeSpectrum<S>(n, std::move(classes));
}

// Class indices not realized by any segment at point i.
template <ScalarType S>
std::vector<std::size_t> forbidden_classes_at(const SlopeSpectrum<S>& spectrum, std::size_t i) {
  const std::size_t n = spectrum.points();
  if (i >= n) throw Error(ErrorKind::kIndexOutOfRange, "point index out of range", {i});
  std::vector<bool> realized(spectrum.count(), false);
  for (std::size_t j = 0; j < n; ++j)
    if (j != i) realized[spectrum.class_of(i, j)] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < realized.size(); ++c)
    if (!realized[c]) out.push_back(c);
  return out;
}

template <ScalarType S>
std::vector<Direction<S>> forbidden_slopes_at(const Configuration<S>& c,
                                              const SlopeSpectrum<S>& spectrum, std::size_t i) {
  if (spectrum.points() != c.size())
    throw Error(ErrorKind::kIndexOutOfRange, "spectrum does not belong to configuration");
  std::vector<Direction<S>> out;
  for (std::size_t cls : forbidden_classes_at(spectrum, i)) out.push_back(spectrum[cls].direction);
  return out;
}

using ForbiddenSlopeTable = std::vector<std::vector<std::size_t>>;

template <ScalarType S>
ForbiddenSlopeTable forbidden_slope_table(const SlopeSpectrum<S>& spectrum) {
  ForbiddenSlopeTable table(spectrum.points());
  for (std::size_t i = 0; i < spectrum.points(); ++i) table[i] = forbidden_classes_at(spectrum, i);
  return table;
}

// True if `c`, as labeled, traverses the vertices of a convex polygon
// (either orientation, any starting vertex).
template <ScalarType S>
bool is_convex_polygon_order(const Configuration<S>& c) {
  std::vector<std::size_t> hull;
  try {
    hull = convex_position_order(c);
  } catch (const Error&) {
    return false;
  }
  const std::size_t n = c.size();
  const std::size_t start = hull[0];
  bool forward = true;
  bool backward = true;
  for (std::size_t k = 0; k < n; ++k) {
    forward = forward && hull[k] == (start + k) % n;
    backward = backward && hull[k] == (start + n - k) % n;
  }
  return forward || backward;
}

struct Lemma1Forbidden {};
struct Lemma1Witness {
  std::size_t p;
};
using Lemma1Verdict = std::variant<Lemma1Forbidden, Lemma1Witness>;

// For a convex polygon A_0..A_{n-1} and i < j < k, decides between
// "slope of A_i A_k is forbidden at A_j" and "A_i A_k || A_j A_p, i < p < k".
// Either branch failing its side conditions is a LemmaViolation.
template <ScalarType S>
Lemma1Verdict lemma1_dichotomy(const Configuration<S>& c, const SlopeSpectrum<S>& spectrum,
                               std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = c.size();
  if (!(i < j && j < k)) throw Error(ErrorKind::kIndexOrder, "need i < j < k", {i, j, k});
  if (k >= n) throw Error(ErrorKind::kIndexOutOfRange, "index out of range", {k});

  const std::size_t target = spectrum.class_of(i, k);
  std::vector<std::size_t> hits;
  for (std::size_t p = 0; p < n; ++p)
    if (p != j && spectrum.class_of(j, p) == target) hits.push_back(p);

  if (hits.empty()) return Lemma1Forbidden{};
  if (hits.size() > 1)
    throw Error(ErrorKind::kLemmaViolation, "several segments at A_j share the slope", hits);
  const std::size_t p = hits.front();
  if (!(i < p && p < k))
    throw Error(ErrorKind::kLemmaViolation, "parallel partner outside (i, k)", {i, j, k, p});

  for (std::size_t l = 0; l < n; ++l) {
    if (l != i && l != j && l != k && spectrum.class_of(i, l) == target)
      throw Error(ErrorKind::kLemmaViolation, "slope repeats at A_i", {i, l});
    if (l != i && l != j && l != k && l != p && spectrum.class_of(l, j) == target)
      throw Error(ErrorKind::kLemmaViolation, "slope repeats at A_j", {j, l});
  }
  return Lemma1Witness{p};
}

template <ScalarType S>
Lemma1Verdict lemma1_dichotomy(const Configuration<S>& c, std::size_t i, std::size_t j,
                               std::size_t k) {
  if (!is_convex_polygon_order(c))
    throw Error(ErrorKind::kNotConvexPosition, "configuration is not labeled in convex order");
  return lemma1_dichotomy(c, slope_spectrum(c), i, j, k);
}

enum class Criticality { kCritical, kNearCritical, kGeneralPositionMinimal, kNPlusOne, kOther };

inline const char* criticality_name(Criticality k) {
  switch (k) {
    case Criticality::kCritical: return "Critical";
    case Criticality::kNearCritical: return "NearCritical";
    case Criticality::kGeneralPositionMinimal: return "GeneralPositionMinimal";
    case Criticality::kNPlusOne: return "NPlusOne";
    case Criticality::kOther: return "Other";
  }
  return "Other";
}

struct CriticalityReport {
  Criticality kind;
  std::size_t count;
  bool general_position;
};

template <ScalarType S>
CriticalityReport classify_criticality(const Configuration<S>& c) {
  const std::size_t n = c.size();
  if (n < 3) throw Error(ErrorKind::kTooFewPoints, "criticality needs n >= 3");
  bool all_collinear = true;
  for (std::size_t k = 2; k < n && all_collinear; ++k)
    all_collinear = orientation(c[0], c[1], c[k]) == 0;
  if (all_collinear) throw Error(ErrorKind::kAllCollinear, "all points are collinear");

  const std::size_t count = slope_spectrum(c).count();
  const bool gp = c.is_general_position();
  Criticality kind = Criticality::kOther;
  if (count + 1 == n) {
    kind = Criticality::kCritical;
  } else if (count == n) {
    kind = gp ? Criticality::kGeneralPositionMinimal : Criticality::kNearCritical;
  } else if (count == n + 1) {
    kind = Criticality::kNPlusOne;
  }
  return {kind, count, gp};
}

}  // namespace slopes
