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

// Verifier for configurations of n >= 7 points in general position with
// exactly n + 1 slopes: such a set is n vertices of an affinely regular
// (n + 1)-gon. verify_theorem() either produces a Certificate (the conic,
// a cyclic group parameterization A_i <-> j x of order n + 1, and the
// reconstructed missing vertex) or a Refutation naming the first pipeline
// stage that failed.
//
// Gap geometry. With the missing vertex between positions g and g + 1 of
// the convex order, the cyclic chain P_{j+1}P_{j+2} || P_j P_{j+3} fails
// exactly at j = g - 2 and j = g; the quadruple with the gap in its middle
// still balances. Any other failure pattern is not a theorem instance.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slopes/conic.hpp"
#include "slopes/geometry.hpp"
#include "slopes/regularity.hpp"
#include "slopes/slopes.hpp"

namespace slopes {

enum class Stage {
  kSize,
  kGeneralPosition,
  kConvexPosition,
  kSlopeCount,
  kCoconic,
  kChainGap,
  kReconstruction,
};

inline const char* stage_name(Stage s) {
  switch (s) {
    case Stage::kSize: return "Size";
    case Stage::kGeneralPosition: return "GeneralPosition";
    case Stage::kConvexPosition: return "ConvexPosition";
    case Stage::kSlopeCount: return "SlopeCount";
    case Stage::kCoconic: return "Coconic";
    case Stage::kChainGap: return "ChainGap";
    case Stage::kReconstruction: return "Reconstruction";
  }
  return "Unknown";
}

struct Refutation {
  Stage stage;
  std::string reason;
  std::vector<std::size_t> witness;  // original point indices, or chain positions for ChainGap
  std::optional<std::size_t> count;  // slope count, for SlopeCount
};

template <ScalarType S>
struct Certificate {
  Conic<S> conic;
  Point<S> base;       // O, the point right after the gap
  Point<S> generator;  // x, the point after O
  std::vector<std::size_t> order;     // convex order, original indices
  std::size_t gap = 0;                // missing vertex sits after position `gap`
  std::vector<std::size_t> residues;  // residues[i]: A_i (original index) is residues[i] * x
  std::size_t missing_residue = 0;    // always n
  Point<S> missing_vertex;            // B
  bool full_chain_ok = false;
};

template <ScalarType S>
using TheoremVerdict = std::variant<Certificate<S>, Refutation>;

// B with B + A_{g+1} = A_g + A_{g+2} in the conic group, i.e. the second
// intersection of the conic with the line through A_{g+1} parallel to
// A_g A_{g+2}. `a` is in convex order and g indexes it cyclically.
template <ScalarType S>
Point<S> reconstruct_missing_vertex(const Configuration<S>& a, const Conic<S>& conic,
                                    std::size_t g) {
  const auto gi = static_cast<long long>(g);
  const Point<S>& prev = a.at_cyclic(gi - 1);
  const Point<S>& before = a.at_cyclic(gi);
  const Point<S>& after = a.at_cyclic(gi + 1);
  const Point<S>& after2 = a.at_cyclic(gi + 2);
  if (conic.is_degenerate())
    throw Error(ErrorKind::kDegenerateConic, "reconstruction needs a non-degenerate conic");
  Point<S> b;
  try {
    b = second_intersection(conic, after, direction(before, after2));
  } catch (const Error& e) {
    throw Error(ErrorKind::kInconsistentGap, std::string("no second intersection: ") + e.what());
  }
  if (b == after) throw Error(ErrorKind::kInconsistentGap, "reconstructed vertex coincides");
  if (!parallel(b, after, before, after2))
    throw Error(ErrorKind::kInconsistentGap, "B A_{g+1} is not parallel to A_g A_{g+2}");
  if (!parallel(b, before, prev, after))
    throw Error(ErrorKind::kInconsistentGap, "B A_g is not parallel to A_{g-1} A_{g+1}");
  return b;
}

// Chain positions failing in a cyclic polygon with a single gap after g.
inline std::optional<std::size_t> gap_from_failures(const std::vector<std::size_t>& f,
                                                    std::size_t n) {
  if (f.size() != 2 || n < 5) return std::nullopt;
  if ((f[0] + 2) % n == f[1]) return f[1];
  if ((f[1] + 2) % n == f[0]) return f[0];
  return std::nullopt;
}

template <ScalarType S>
TheoremVerdict<S> verify_theorem(const Configuration<S>& c) {
  const std::size_t n = c.size();
  if (n < 7) return Refutation{Stage::kSize, "need n >= 7, got " + std::to_string(n), {}, {}};

  if (!c.is_general_position()) {
    const auto& w = *c.general_position_result().witness;
    return Refutation{Stage::kGeneralPosition, "collinear triple", {w[0], w[1], w[2]}, {}};
  }

  std::vector<std::size_t> order;
  try {
    order = convex_position_order(c);
  } catch (const Error& e) {
    return Refutation{Stage::kConvexPosition, "point strictly inside the convex hull",
                      e.indices(), {}};
  }
  const Configuration<S> a = c.relabel(order);

  const auto spectrum = slope_spectrum(a);
  if (spectrum.count() != n + 1)
    return Refutation{Stage::kSlopeCount,
                      "expected " + std::to_string(n + 1) + " slopes, found " +
                          std::to_string(spectrum.count()),
                      {},
                      spectrum.count()};
  for (std::size_t i = 0; i < n; ++i)
    if (forbidden_classes_at(spectrum, i).size() != 2)
      return Refutation{Stage::kSlopeCount, "point does not have exactly two forbidden slopes",
                        {order[i]}, spectrum.count()};

  std::optional<Conic<S>> conic;
  try {
    conic = conic_through_5<S>(a.points().first(5));
  } catch (const Error& e) {
    return Refutation{Stage::kCoconic, std::string("conic fit failed: ") + e.what(), {}, {}};
  }
  if (conic->is_degenerate())
    return Refutation{Stage::kCoconic, "conic through the first five points is degenerate",
                      {order[0], order[1], order[2], order[3], order[4]}, {}};
  for (std::size_t i = 5; i < n; ++i)
    if (!conic->contains(a[i]))
      return Refutation{Stage::kCoconic, "point is off the conic", {order[i]}, {}};

  const auto chain = korchmaros_chain<S>(a.points(), true);
  if (chain.holds)
    return Refutation{Stage::kChainGap,
                      "chain closes with no gap: affinely regular n-gon with n slopes", {}, {}};
  const auto gap = gap_from_failures(chain.failures, n);
  if (!gap)
    return Refutation{Stage::kChainGap, "chain failures do not form a single gap",
                      chain.failures, {}};
  const std::size_t g = *gap;

  Certificate<S> cert{*conic, {}, {}, order, g, {}, n, {}, false};
  try {
    cert.missing_vertex = reconstruct_missing_vertex(a, *conic, g);
  } catch (const Error& e) {
    return Refutation{Stage::kReconstruction, e.what(), {}, {}};
  }

  // Points after the gap, then B.
  std::vector<Point<S>> closed;
  for (std::size_t k = 0; k < n; ++k) closed.push_back(a.at_cyclic(static_cast<long long>(g + 1 + k)));
  closed.push_back(cert.missing_vertex);
  for (std::size_t k = 0; k < n; ++k)
    if (closed[k] == cert.missing_vertex)
      return Refutation{Stage::kReconstruction, "reconstructed vertex coincides with an input point",
                        {order[(g + 1 + k) % n]}, {}};
  cert.full_chain_ok = korchmaros_chain<S>(closed, true).holds;
  if (!cert.full_chain_ok)
    return Refutation{Stage::kReconstruction, "closed (n+1)-gon fails the chain", {}, {}};

  try {
    const ConicGroup<S> group(*conic, closed[0]);
    cert.base = closed[0];
    cert.generator = closed[1];
    cert.residues.assign(n, 0);
    Point<S> multiple = group.identity();
    for (std::size_t k = 0; k <= n + 1; ++k) {
      if (k > 0) multiple = group.add(multiple, cert.generator);
      if (k < n) {
        if (!(multiple == closed[k]))
          return Refutation{Stage::kReconstruction, "point is not the expected multiple of x",
                            {order[(g + 1 + k) % n]}, {}};
        cert.residues[order[(g + 1 + k) % n]] = k;
      } else if (k == n) {
        if (!(multiple == cert.missing_vertex))
          return Refutation{Stage::kReconstruction, "n x differs from the missing vertex", {}, {}};
      } else if (!(multiple == group.identity())) {
        return Refutation{Stage::kReconstruction, "x does not have order n + 1", {}, {}};
      }
      if (k >= 1 && k <= n && multiple == group.identity())
        return Refutation{Stage::kReconstruction, "x has order below n + 1", {}, {}};
    }
  } catch (const Error& e) {
    return Refutation{Stage::kReconstruction, e.what(), {}, {}};
  }
  return cert;
}

enum class ProofCaseTag { kCase1_1, kCase1_2, kCase1_3, kCase1_4, kCase2_1, kCase2_2 };

inline const char* proof_case_name(ProofCaseTag t) {
  switch (t) {
    case ProofCaseTag::kCase1_1: return "Case1_1";
    case ProofCaseTag::kCase1_2: return "Case1_2";
    case ProofCaseTag::kCase1_3: return "Case1_3";
    case ProofCaseTag::kCase1_4: return "Case1_4";
    case ProofCaseTag::kCase2_1: return "Case2_1";
    case ProofCaseTag::kCase2_2: return "Case2_2";
  }
  return "Unknown";
}

struct ProofCase {
  ProofCaseTag tag;
  std::size_t rotation = 0;  // position in convex order that becomes A_1
  bool reflected = false;
  // labels[k] = original index of A_{k+1} under the reindexing
  std::vector<std::size_t> labels;
};

// Labels A_1..A_n of the proof, chosen deterministically:
//  - Case 1 when A_{i+1}A_{i+2} || A_i A_{i+3} for every cyclic i, refined by
//    which chord is parallel to A_i A_{i+5};
//  - otherwise Case 2, rotated to the smallest failing i and reflected when
//    A_4 is not closer than A_1 to the line A_2 A_3.
template <ScalarType S>
ProofCase classify_proof_case(const Configuration<S>& c) {
  const std::size_t n = c.size();
  if (n < 7) throw Error(ErrorKind::kTooFewPoints, "proof cases need n >= 7");
  const auto order = convex_position_order(c);
  const Configuration<S> a = c.relabel(order);
  auto A = [&](std::size_t base, long long off) -> const Point<S>& {
    return a.at_cyclic(static_cast<long long>(base) + off);
  };
  auto rotated = [&](std::size_t r) {
    std::vector<std::size_t> labels(n);
    for (std::size_t k = 0; k < n; ++k) labels[k] = order[(r + k) % n];
    return labels;
  };

  const auto chain = korchmaros_chain<S>(a.points(), true);
  if (chain.holds) {
    bool all_11 = true;
    std::optional<std::size_t> first_12, first_13, first_14;
    for (std::size_t i = 0; i < n; ++i) {
      const bool p11 = parallel(A(i, 0), A(i, 5), A(i, 1), A(i, 4));
      const bool p12 = parallel(A(i, 0), A(i, 5), A(i, 2), A(i, 4));
      const bool p13 = parallel(A(i, 0), A(i, 5), A(i, 1), A(i, 3));
      all_11 = all_11 && p11;
      if (p12 && !first_12) first_12 = i;
      if (p13 && !first_13) first_13 = i;
      if (!p11 && !p12 && !p13 && !first_14) first_14 = i;
    }
    if (all_11) return {ProofCaseTag::kCase1_1, 0, false, rotated(0)};
    if (first_12) return {ProofCaseTag::kCase1_2, *first_12, false, rotated(*first_12)};
    if (first_13) return {ProofCaseTag::kCase1_3, *first_13, false, rotated(*first_13)};
    return {ProofCaseTag::kCase1_4, *first_14, false, rotated(*first_14)};
  }

  const std::size_t r = *chain.first_failure;
  // Distances to line A_2 A_3 compared through |cross|, same base segment.
  const Point<S> base = A(r, 2) - A(r, 1);
  const S d4 = abs_value(cross(base, A(r, 3) - A(r, 1)));
  const S d1 = abs_value(cross(base, A(r, 0) - A(r, 1)));
  ProofCase pc{ProofCaseTag::kCase2_2, r, false, {}};
  if (d4 < d1) {
    pc.labels = rotated(r);
  } else {
    pc.reflected = true;
    pc.labels.resize(n);
    for (std::size_t k = 0; k < n; ++k) pc.labels[k] = order[(r + 3 + n - k) % n];
  }
  const auto& L = pc.labels;
  pc.tag = parallel(c[L[n - 2]], c[L[1]], c[L[n - 1]], c[L[0]]) ? ProofCaseTag::kCase2_1
                                                               : ProofCaseTag::kCase2_2;
  return pc;
}

}  // namespace slopes
