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

// Point files and JSON reports.
//
// Point file grammar (one point per line):
//
//   line      := ws* [ coord ws+ coord ws* ] [ '#' any* ]
//   coord     := integer | fraction | decimal
//   integer   := sign? digit+
//   fraction  := sign? digit+ '/' digit+          (denominator > 0)
//   decimal   := sign? ( digit+ '.' digit* | '.' digit+ | digit+ ) exponent?
//                with at least a '.' or an exponent
//   exponent  := ('e' | 'E') sign? digit+
//
// Any decimal selects the floating backend; fractions and integers select
// the exact one. Decimals and fractions in the same file are a
// BackendMismatch; integers go with either.

#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "slopes/generators.hpp"
#include "slopes/slopes.hpp"
#include "slopes/verifier.hpp"

namespace slopes {

using Json = nlohmann::json;

namespace detail {

enum class TokenKind { kInteger, kFraction, kDecimal };

inline std::optional<TokenKind> classify_token(const std::string& t) {
  static const std::regex integer(R"([+-]?[0-9]+)");
  static const std::regex fraction(R"([+-]?[0-9]+/[0-9]+)");
  static const std::regex decimal(R"([+-]?([0-9]+\.[0-9]*|\.[0-9]+|[0-9]+)([eE][+-]?[0-9]+)?)");
  if (std::regex_match(t, integer)) return TokenKind::kInteger;
  if (std::regex_match(t, fraction)) return TokenKind::kFraction;
  if (std::regex_match(t, decimal)) return TokenKind::kDecimal;
  return std::nullopt;
}

inline Rational parse_rational(std::string t) {
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return Rational(t);
}

}  // namespace detail

// Parses a point file. `forced` overrides backend selection: forcing
// rational on decimal input is a BackendMismatch, forcing float converts.
inline AnyConfiguration parse_point_file(std::string_view text,
                                         std::optional<Backend> forced = std::nullopt,
                                         double eps = kDefaultEps) {
  struct Row {
    std::string x, y;
    std::size_t line;
  };
  std::vector<Row> rows;
  bool saw_decimal = false, saw_fraction = false;
  std::size_t first_decimal = 0, first_fraction = 0;

  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 2)
      throw Error(ErrorKind::kParseError,
                  "line " + std::to_string(no) + ": expected two coordinates", {no});
    for (const auto& t : tok) {
      const auto kind = detail::classify_token(t);
      if (!kind)
        throw Error(ErrorKind::kParseError,
                    "line " + std::to_string(no) + ": bad coordinate '" + t + "'", {no});
      if (*kind == detail::TokenKind::kFraction) {
        if (t.substr(t.find('/') + 1).find_first_not_of('0') == std::string::npos)
          throw Error(ErrorKind::kParseError,
                      "line " + std::to_string(no) + ": zero denominator", {no});
        if (!saw_fraction) first_fraction = no;
        saw_fraction = true;
      }
      if (*kind == detail::TokenKind::kDecimal) {
        if (!saw_decimal) first_decimal = no;
        saw_decimal = true;
      }
    }
    rows.push_back({tok[0], tok[1], no});
  }
  if (rows.empty()) throw Error(ErrorKind::kParseError, "line 1: no points in input", {1});
  if (saw_decimal && saw_fraction)
    throw Error(ErrorKind::kBackendMismatch,
                "decimals (line " + std::to_string(first_decimal) + ") mixed with fractions (line " +
                    std::to_string(first_fraction) + ")",
                {first_decimal, first_fraction});
  if (saw_decimal && forced == Backend::kExactRational)
    throw Error(ErrorKind::kBackendMismatch,
                "line " + std::to_string(first_decimal) + ": decimal input cannot be exact",
                {first_decimal});

  const bool exact = !saw_decimal && forced != Backend::kApproxReal;
  if (exact) {
    std::vector<Point<Rational>> pts;
    for (const auto& r : rows) pts.push_back({detail::parse_rational(r.x), detail::parse_rational(r.y)});
    return Configuration<Rational>(std::move(pts));
  }
  std::vector<Point<Approx>> pts;
  for (const auto& r : rows) {
    auto value = [&](const std::string& t) {
      if (t.find('/') != std::string::npos) return to_double(detail::parse_rational(t));
      return std::strtod(t.c_str(), nullptr);
    };
    const double x = value(r.x), y = value(r.y);
    if (!std::isfinite(x) || !std::isfinite(y))
      throw Error(ErrorKind::kParseError, "line " + std::to_string(r.line) + ": coordinate overflow",
                  {r.line});
    pts.push_back({Approx(x, eps), Approx(y, eps)});
  }
  return Configuration<Approx>(std::move(pts), eps);
}

template <ScalarType S>
std::string format_point_file(const Configuration<S>& c) {
  std::string out;
  for (const auto& p : c.points()) out += to_string(p.x) + " " + to_string(p.y) + "\n";
  return out;
}

inline std::string format_point_file(const AnyConfiguration& c) {
  return std::visit([](const auto& cfg) { return format_point_file(cfg); }, c);
}

// JSON encodings. Exact scalars are "p/q" strings; floats are numbers.

inline Json to_json(const Rational& r) { return r.str(); }
inline Json to_json(Approx a) { return a.value(); }

template <ScalarType S>
Json to_json(const Point<S>& p) {
  return Json::array({to_json(p.x), to_json(p.y)});
}

template <ScalarType S>
Json to_json(const Direction<S>& d) {
  return Json::array({to_json(d.dx()), to_json(d.dy())});
}

template <ScalarType S>
Json to_json(const Conic<S>& k) {
  Json out = Json::array();
  for (const auto& v : k.coeffs()) out.push_back(to_json(v));
  return out;
}

template <ScalarType S>
Json spectrum_json(const SlopeSpectrum<S>& spectrum) {
  Json classes = Json::array();
  for (const auto& cl : spectrum.classes()) {
    Json pairs = Json::array();
    for (const auto& [i, j] : cl.pairs) pairs.push_back({i, j});
    Json entry{{"direction", to_json(cl.direction)}, {"pairs", pairs}};
    if constexpr (!is_exact_v<S>) entry["angle"] = cl.direction.angle();
    classes.push_back(entry);
  }
  Json forbidden = Json::array();
  for (const auto& row : forbidden_slope_table(spectrum)) forbidden.push_back(row);
  return {{"count", spectrum.count()}, {"classes", classes}, {"forbidden", forbidden}};
}

inline Json to_json(const CriticalityReport& r) {
  return {{"kind", criticality_name(r.kind)},
          {"count", r.count},
          {"general_position", r.general_position}};
}

inline Json to_json(const Refutation& r) {
  Json out{{"kind", "Refutation"},
           {"stage", stage_name(r.stage)},
           {"reason", r.reason},
           {"witness", r.witness}};
  if (r.count) out["count"] = *r.count;
  return out;
}

template <ScalarType S>
Json to_json(const Certificate<S>& c) {
  return {{"kind", "Certificate"},
          {"conic", to_json(c.conic)},
          {"base", to_json(c.base)},
          {"generator", to_json(c.generator)},
          {"order", c.order},
          {"gap", c.gap},
          {"residues", c.residues},
          {"missing_residue", c.missing_residue},
          {"missing_vertex", to_json(c.missing_vertex)},
          {"full_chain_ok", c.full_chain_ok}};
}

template <ScalarType S>
Json to_json(const TheoremVerdict<S>& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

inline Json to_json(const ProofCase& pc) {
  return {{"tag", proof_case_name(pc.tag)},
          {"rotation", pc.rotation},
          {"reflected", pc.reflected},
          {"labels", pc.labels}};
}

}  // namespace slopes
