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

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace slopes;
using namespace slopes::testing;

TEST(RngTest, StandardEngineVector) {
  // Fixed by the C++ standard for a default-seeded mt19937_64.
  Rng rng;
  for (int i = 1; i < 10000; ++i) rng();
  EXPECT_EQ(rng(), 9981545732273789042ULL);
}

TEST(RngTest, UniformIntStaysInRange) {
  Rng rng(3);
  std::array<int, 7> hist{};
  for (int i = 0; i < 7000; ++i) {
    const auto v = uniform_int(rng, -3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
    ++hist[static_cast<std::size_t>(v + 3)];
  }
  for (int h : hist) EXPECT_GT(h, 800);
  EXPECT_EQ(uniform_int(rng, 5, 5), 5);
}

TEST(RngTest, UniformUnitInHalfOpenInterval) {
  Rng rng(4);
  for (int i = 0; i < 10000; ++i) {
    const double u = uniform_unit(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RegularPolygonTest, Examples) {
  const auto sq = regular_polygon(4);
  ASSERT_EQ(sq.size(), 4u);
  EXPECT_LT(dist(sq[0], 1, 0), 1e-15);
  EXPECT_LT(dist(sq[1], 0, 1), 1e-15);
  EXPECT_LT(dist(sq[2], -1, 0), 1e-15);
  EXPECT_LT(dist(sq[3], 0, -1), 1e-15);

  const auto oct = regular_polygon(8);
  EXPECT_EQ(oct.size(), 8u);
  EXPECT_EQ(slope_spectrum(oct).count(), 8u);
  EXPECT_EQ(slope_spectrum(regular_polygon(3)).count(), 3u);
  EXPECT_TRUE(throws_kind([] { regular_polygon(2); }, ErrorKind::kMTooSmall));
}

TEST(RegularPolygonTest, SlopeCountEqualsM) {
  for (long long m = 3; m <= 24; ++m) {
    const auto c = regular_polygon(m);
    EXPECT_TRUE(c.is_general_position());
    EXPECT_EQ(slope_spectrum(c).count(), static_cast<std::size_t>(m)) << m;
  }
}

TEST(RegularPolygonTest, OneDeletionKeepsM) {
  for (long long m = 8; m <= 24; ++m)
    for (std::size_t v = 0; v < static_cast<std::size_t>(m); v += 3)
      EXPECT_EQ(slope_spectrum(delete_vertices(regular_polygon(m), {v})).count(),
                static_cast<std::size_t>(m))
          << m << " " << v;
}

TEST(DeleteVerticesTest, Examples) {
  const auto a = delete_vertices(regular_polygon(8), {0});
  EXPECT_EQ(a.size(), 7u);
  EXPECT_EQ(slope_spectrum(a).count(), 8u);
  const auto b = delete_vertices(regular_polygon(9), {3});
  EXPECT_EQ(b.size(), 8u);
  EXPECT_EQ(slope_spectrum(b).count(), 9u);
  EXPECT_TRUE(throws_kind([] { delete_vertices(regular_polygon(5), {0, 1, 2}); },
                          ErrorKind::kTooFewRemaining));
  EXPECT_TRUE(throws_kind([] { delete_vertices(regular_polygon(5), {5}); },
                          ErrorKind::kIndexOutOfRange));
}

TEST(ApplyAffineTest, Examples) {
  const auto sq = exact_config({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto id = apply_affine(sq, AffineMap<Q>::identity());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(id[i], sq[i]);

  const auto shear = AffineMap<Q>::make(Q(1), Q(2), Q(0), Q(1), Q(0), Q(0));
  const auto par = apply_affine(sq, shear);
  EXPECT_EQ(par[2], pt(3, 1));
  EXPECT_EQ(slope_spectrum(par).count(), 4u);

  const auto scale = AffineMap<Approx>::make(Approx(3.0), Approx(0.0), Approx(0.0), Approx(0.5),
                                             Approx(0.0), Approx(0.0));
  EXPECT_EQ(slope_spectrum(apply_affine(delete_vertices(regular_polygon(8), {0}), scale)).count(),
            8u);
}

TEST(PerturbTest, Examples) {
  const auto hex = regular_polygon(6);
  const auto same = perturb(hex, Approx(0.0), 9);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    EXPECT_EQ(same[i].x.value(), hex[i].x.value());
    EXPECT_EQ(same[i].y.value(), hex[i].y.value());
  }

  const auto moved = perturb(hex, Approx(0.05), 1);
  EXPECT_FALSE(korchmaros_chain<Approx>(moved.points(), true).holds);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    EXPECT_LE(std::abs(moved[i].x.value() - hex[i].x.value()), 0.05);
    EXPECT_LE(std::abs(moved[i].y.value() - hex[i].y.value()), 0.05);
  }
  const auto again = perturb(hex, Approx(0.05), 1);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    EXPECT_EQ(again[i].x.value(), moved[i].x.value());
    EXPECT_EQ(again[i].y.value(), moved[i].y.value());
  }
}

TEST(PerturbTest, ExactStaysExactAndBounded) {
  const auto sq = exact_config({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  const auto p = perturb(sq, Q(1, 10), 5);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_LE(abs_value(p[i].x - sq[i].x), Q(1, 10));
    EXPECT_LE(abs_value(p[i].y - sq[i].y), Q(1, 10));
    EXPECT_LE(boost::multiprecision::denominator(p[i].x), 10 * 1048576 * 2);
  }
}

TEST(RandomGeneralPositionTest, Examples) {
  const auto tri = random_general_position(3, 77);
  EXPECT_NE(orientation(tri[0], tri[1], tri[2]), 0);
  const auto a = random_general_position(8, 42);
  EXPECT_TRUE(is_general_position(a).general);
  const auto b = random_general_position(8, 42);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(a[i], b[i]);
  const auto c = random_general_position(8, 43);
  EXPECT_FALSE(a[0] == c[0] && a[1] == c[1]);
}

TEST(RandomGeneralPositionTest, RespectsBounds) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = random_general_position(10, seed, 5, 7);
    ASSERT_TRUE(c.is_general_position());
    for (const auto& p : c.points()) {
      EXPECT_LE(abs_value(p.x), 5);
      EXPECT_LE(boost::multiprecision::denominator(p.x), 7);
      EXPECT_LE(abs_value(p.y), 5);
    }
  }
}

TEST(RandomGeneralPositionTest, ExhaustionIsReported) {
  // At most six of the nine lattice points in [-1,1]^2 avoid collinear triples.
  EXPECT_TRUE(throws_kind([] { random_general_position(7, 1, 1, 1); },
                          ErrorKind::kGenerationExhausted));
}

TEST(PipelineTest, ComposesSteps) {
  GeneratorSpec spec;
  spec.steps.push_back(RegularPolygonStep{8});
  spec.steps.push_back(DeleteVerticesStep{{0}});
  spec.steps.push_back(AffineImageStep{AffineMap<Rational>::make(Q(3), Q(0), Q(0), Q(1, 2), Q(1), Q(2))});
  const auto out = run_generator(spec);
  ASSERT_TRUE(std::holds_alternative<Configuration<Approx>>(out));
  const auto& c = std::get<Configuration<Approx>>(out);
  EXPECT_EQ(c.size(), 7u);
  EXPECT_LT(dist(c[0], 3 * std::cos(std::numbers::pi / 4) + 1, 0.5 * std::sin(std::numbers::pi / 4) + 2),
            1e-12);
  EXPECT_EQ(slope_spectrum(c).count(), 8u);
}

TEST(PipelineTest, ExactPipelineStaysExact) {
  GeneratorSpec spec;
  spec.steps.push_back(RandomGeneralPositionStep{6, 42});
  spec.steps.push_back(AffineImageStep{AffineMap<Rational>::make(Q(2), Q(1), Q(0), Q(1), Q(0), Q(0))});
  spec.steps.push_back(PerturbStep{Q(1, 100), 3});
  const auto out = run_generator(spec);
  EXPECT_TRUE(std::holds_alternative<Configuration<Rational>>(out));
}

TEST(PipelineTest, SourceMustComeFirst) {
  GeneratorSpec spec;
  spec.steps.push_back(DeleteVerticesStep{{0}});
  EXPECT_TRUE(throws_kind([&] { run_generator(spec); }, ErrorKind::kInvalidSpec));
  spec.steps = {RegularPolygonStep{5}, RegularPolygonStep{6}};
  EXPECT_TRUE(throws_kind([&] { run_generator(spec); }, ErrorKind::kInvalidSpec));
  EXPECT_TRUE(throws_kind([] { run_generator(GeneratorSpec{}); }, ErrorKind::kInvalidSpec));
}
