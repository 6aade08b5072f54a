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

#include <map>
#include <regex>
#include <set>

#include <gtest/gtest.h>

#include "slopes/io.hpp"
#include "slopes/svg.hpp"
#include "test_util.hpp"

using namespace slopes;
using namespace slopes::testing;

namespace {

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(ParseTest, ExactFractions) {
  const auto c = parse_point_file("1/3 2/3\n0 0\n# comment\n\n-4/6 +5  # trailing\n");
  ASSERT_TRUE(std::holds_alternative<Configuration<Rational>>(c));
  const auto& e = std::get<Configuration<Rational>>(c);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], (P{Q(1, 3), Q(2, 3)}));
  EXPECT_EQ(e[2], (P{Q(-2, 3), Q(5)}));
}

TEST(ParseTest, DecimalsSelectFloat) {
  const auto c = parse_point_file("0.5 1\n2 -1e-3\n.25 3.\n");
  ASSERT_TRUE(std::holds_alternative<Configuration<Approx>>(c));
  const auto& a = std::get<Configuration<Approx>>(c);
  EXPECT_EQ(a[0].x.value(), 0.5);
  EXPECT_EQ(a[1].y.value(), -1e-3);
  EXPECT_EQ(a[2].x.value(), 0.25);
  EXPECT_EQ(a[2].y.value(), 3.0);
  // 0.1 stays the nearest double, never becomes 1/10.
  const auto d = parse_point_file("0.1 0\n");
  EXPECT_EQ(std::get<Configuration<Approx>>(d)[0].x.value(), 0.1);
}

TEST(ParseTest, Errors) {
  try {
    parse_point_file("0 0\n0.5 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParseError);
    EXPECT_EQ(e.indices(), std::vector<std::size_t>{2});
  }
  EXPECT_TRUE(throws_kind([] { parse_point_file(""); }, ErrorKind::kParseError));
  EXPECT_TRUE(throws_kind([] { parse_point_file("# only a comment\n"); }, ErrorKind::kParseError));
  EXPECT_TRUE(throws_kind([] { parse_point_file("1 2 3\n"); }, ErrorKind::kParseError));
  EXPECT_TRUE(throws_kind([] { parse_point_file("1/0 2\n"); }, ErrorKind::kParseError));
  EXPECT_TRUE(throws_kind([] { parse_point_file("1e999 2\n"); }, ErrorKind::kParseError));
  EXPECT_TRUE(throws_kind([] { parse_point_file("1 1\n1 1\n"); }, ErrorKind::kDuplicatePoint));
}

TEST(ParseTest, BackendSelection) {
  EXPECT_TRUE(throws_kind([] { parse_point_file("1/2 0\n0.5 1\n"); }, ErrorKind::kBackendMismatch));
  EXPECT_TRUE(throws_kind([] { parse_point_file("0.5 1\n", Backend::kExactRational); },
                          ErrorKind::kBackendMismatch));
  const auto f = parse_point_file("1/2 0\n3 1\n", Backend::kApproxReal, 1e-6);
  ASSERT_TRUE(std::holds_alternative<Configuration<Approx>>(f));
  EXPECT_EQ(std::get<Configuration<Approx>>(f).eps(), 1e-6);
  EXPECT_EQ(std::get<Configuration<Approx>>(f)[0].x.value(), 0.5);
  // Integers go with decimals.
  EXPECT_TRUE(std::holds_alternative<Configuration<Approx>>(parse_point_file("1 0\n0.5 1\n")));
}

TEST(RoundTripTest, Exact) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto c = random_general_position(9, seed);
    const auto back = parse_point_file(format_point_file(c));
    const auto& e = std::get<Configuration<Rational>>(back);
    ASSERT_EQ(e.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(e[i], c[i]);
  }
}

TEST(RoundTripTest, FloatIsBitExact) {
  for (long long m = 3; m <= 24; ++m) {
    const auto c = perturb(regular_polygon(m), Approx(1e-3), static_cast<std::uint64_t>(m));
    const auto back = parse_point_file(format_point_file(c));
    const auto& a = std::get<Configuration<Approx>>(back);
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_EQ(a[i].x.value(), c[i].x.value());
      EXPECT_EQ(a[i].y.value(), c[i].y.value());
    }
  }
}

TEST(JsonTest, ExactScalarsAreStrings) {
  const auto j = to_json(P{Q(1, 3), Q(-2)});
  EXPECT_EQ(j.dump(), R"(["1/3","-2"])");
  const auto s = spectrum_json(slope_spectrum(exact_config({{0, 0}, {1, 0}, {1, 1}, {0, 1}})));
  EXPECT_EQ(s["count"], 4);
  EXPECT_EQ(s["forbidden"].size(), 4u);
  for (const auto& row : s["forbidden"]) EXPECT_EQ(row.size(), 1u);
}

TEST(JsonTest, VerdictEncoding) {
  const auto v = verify_theorem(delete_vertices(regular_polygon(8), {0}));
  const auto j = to_json(v);
  EXPECT_EQ(j["kind"], "Certificate");
  EXPECT_EQ(j["missing_residue"], 7);
  EXPECT_EQ(j["residues"].size(), 7u);
  const auto r = to_json(verify_theorem(regular_polygon(8)));
  EXPECT_EQ(r["kind"], "Refutation");
  EXPECT_EQ(r["stage"], "SlopeCount");
  EXPECT_EQ(r["count"], 8);
}

TEST(SvgTest, ConicPath) {
  const auto c = delete_vertices(regular_polygon(8), {0, 1});
  const auto svg = render_svg(c, parse_highlight("conic"));
  EXPECT_EQ(count_of(svg, "<path"), 1u);
  EXPECT_EQ(count_of(svg, "<circle"), 6u);
  EXPECT_EQ(count_of(svg, "<text"), 6u);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(SvgTest, ParallelClassShared) {
  const auto sq = exact_config({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto svg = render_svg(sq, parse_highlight("parallel (1,0)"));
  const std::regex line_class(R"re(<line class="(class-\d+)")re");
  std::vector<std::string> classes;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line_class); it != std::sregex_iterator(); ++it)
    classes.push_back((*it)[1]);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0], classes[1]);
}

TEST(SvgTest, ParallelClassesGetDistinctDashes) {
  const auto svg = render_svg(delete_vertices(regular_polygon(8), {0}), parse_highlight("parallel"));
  const std::regex line(R"re(<line class="(class-\d+)"[^>]*?(stroke-dasharray="([^"]*)")?/>)re");
  std::map<std::string, std::string> dash_of;
  std::set<std::string> dashes;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator(); ++it) {
    const std::string cls = (*it)[1], dash = (*it)[3];
    if (dash_of.count(cls)) EXPECT_EQ(dash_of[cls], dash);
    dash_of[cls] = dash;
    dashes.insert(dash);
  }
  EXPECT_EQ(dash_of.size(), 8u);
  EXPECT_EQ(dashes.size(), 8u);
}

TEST(SvgTest, ForbiddenAndDeterminism) {
  const auto c = delete_vertices(regular_polygon(8), {0});
  const auto a = render_svg(c, parse_highlight("forbidden 2"));
  EXPECT_EQ(count_of(a, "forbidden-line"), 2u);
  EXPECT_EQ(a, render_svg(c, parse_highlight("forbidden 2")));
  EXPECT_TRUE(throws_kind([&] { render_svg(c, parse_highlight("forbidden 9")); },
                          ErrorKind::kIndexOutOfRange));
}

TEST(SvgTest, LimitsAndBadSpecs) {
  EXPECT_TRUE(throws_kind([] { render_svg(regular_polygon(201), RenderOptions{}); },
                          ErrorKind::kRenderTooLarge));
  EXPECT_TRUE(throws_kind([] { parse_highlight("sparkles"); }, ErrorKind::kInvalidSpec));
  EXPECT_TRUE(throws_kind([] { parse_highlight("forbidden"); }, ErrorKind::kInvalidSpec));
}
