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

// SVG 1.1 figures of a configuration: points with labels, optionally the
// segments of parallel classes (one dash pattern per class), the forbidden
// slopes at a point, or the conic through the first five points.
//
// The view box is the bounding box plus a 10% margin; SVG y points down so
// every y coordinate is negated. Labels are A1..An in convex order when the
// points are in convex position, input order otherwise.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "slopes/conic.hpp"
#include "slopes/slopes.hpp"

namespace slopes {

inline constexpr std::size_t kMaxRenderPoints = 200;

struct RenderOptions {
  enum class Highlight { kNone, kParallel, kForbidden, kConic };
  Highlight highlight = Highlight::kNone;
  std::optional<std::pair<double, double>> parallel_direction;  // all classes when empty
  std::size_t forbidden_index = 0;
};

// Parses "parallel", "parallel (dx,dy)", "parallel dx,dy", "forbidden i",
// "conic" or "none".
inline RenderOptions parse_highlight(const std::string& spec) {
  RenderOptions o;
  std::string s;
  for (char ch : spec)
    if (ch != '(' && ch != ')') s += ch;
  std::istringstream in(s);
  std::string word;
  in >> word;
  if (word.empty() || word == "none") return o;
  if (word == "conic") {
    o.highlight = RenderOptions::Highlight::kConic;
  } else if (word == "forbidden") {
    long long i = -1;
    if (!(in >> i) || i < 0) throw Error(ErrorKind::kInvalidSpec, "forbidden needs a point index");
    o.highlight = RenderOptions::Highlight::kForbidden;
    o.forbidden_index = static_cast<std::size_t>(i);
  } else if (word == "parallel") {
    o.highlight = RenderOptions::Highlight::kParallel;
    std::string rest;
    std::getline(in, rest);
    if (rest.find_first_not_of(" \t") != std::string::npos) {
      for (char& ch : rest)
        if (ch == ',') ch = ' ';
      std::istringstream rs(rest);
      std::string xs, ys;
      if (!(rs >> xs >> ys)) throw Error(ErrorKind::kInvalidSpec, "parallel needs dx,dy");
      auto num = [](const std::string& t) {
        if (t.find('/') != std::string::npos) return to_double(Rational(t));
        return std::stod(t);
      };
      o.parallel_direction = std::make_pair(num(xs), num(ys));
    }
  } else {
    throw Error(ErrorKind::kInvalidSpec, "unknown highlight '" + spec + "'");
  }
  return o;
}

namespace detail {

inline constexpr std::array<const char*, 8> kDashPatterns{
    "none", "6 3", "2 2", "8 3 2 3", "1 3", "10 4", "4 2 1 2 1 2", "12 2 2 2"};

class SvgWriter {
 public:
  SvgWriter(double minx, double miny, double w, double h) : unit_(std::max(w, h)) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(minx) +
            " " + num(miny) + " " + num(w) + " " + num(h) + "\">\n";
  }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
    return buf;
  }

  double unit() const { return unit_; }

  void line(double x1, double y1, double x2, double y2, const std::string& cls,
            const char* dash, double width) {
    out_ += "  <line class=\"" + cls + "\" x1=\"" + num(x1) + "\" y1=\"" + num(-y1) + "\" x2=\"" +
            num(x2) + "\" y2=\"" + num(-y2) + "\" stroke=\"black\" stroke-width=\"" +
            num(width * unit_) + "\"";
    if (std::string(dash) != "none") {
      std::string d;
      std::istringstream in(dash);
      for (double v; in >> v;) d += (d.empty() ? "" : " ") + num(v * 0.004 * unit_);
      out_ += " stroke-dasharray=\"" + d + "\"";
    }
    out_ += "/>\n";
  }

  void raw(const std::string& s) { out_ += s; }

  std::string finish() {
    out_ += "</svg>\n";
    return out_;
  }

 private:
  double unit_;
  std::string out_;
};

}  // namespace detail

template <ScalarType S>
std::string render_svg(const Configuration<S>& c, const RenderOptions& opt) {
  const std::size_t n = c.size();
  if (n == 0) throw Error(ErrorKind::kParseError, "nothing to render");
  if (n > kMaxRenderPoints)
    throw Error(ErrorKind::kRenderTooLarge,
                "at most " + std::to_string(kMaxRenderPoints) + " points can be rendered");

  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = to_double(c[i].x);
    ys[i] = to_double(c[i].y);
  }
  const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
  double w = *xmax - *xmin, h = *ymax - *ymin;
  const double span = std::max({w, h, 1e-12});
  if (w < 1e-12) w = span;
  if (h < 1e-12) h = span;
  const double cx = (*xmin + *xmax) / 2, cy = (*ymin + *ymax) / 2;
  const double mx = 0.1 * w, my = 0.1 * h;
  detail::SvgWriter svg(cx - w / 2 - mx, -(cy + h / 2 + my), w + 2 * mx, h + 2 * my);
  const double view_left = cx - w / 2 - mx, view_right = cx + w / 2 + mx;
  const double view_bottom = cy - h / 2 - my, view_top = cy + h / 2 + my;

  std::vector<std::size_t> label(n);
  bool convex = false;
  if (n >= 3 && c.is_general_position()) {
    try {
      const auto order = convex_position_order(c);
      for (std::size_t k = 0; k < n; ++k) label[order[k]] = k + 1;
      convex = true;
    } catch (const Error&) {
    }
  }
  if (!convex)
    for (std::size_t i = 0; i < n; ++i) label[i] = i + 1;

  using H = RenderOptions::Highlight;
  if (opt.highlight == H::kParallel || opt.highlight == H::kForbidden) {
    const auto spectrum = slope_spectrum(c);
    std::vector<std::size_t> shown;
    if (opt.highlight == H::kParallel) {
      if (opt.parallel_direction) {
        const auto [dx, dy] = *opt.parallel_direction;
        for (std::size_t k = 0; k < spectrum.count(); ++k) {
          const double ux = to_double(spectrum[k].direction.dx());
          const double uy = to_double(spectrum[k].direction.dy());
          if (std::abs(ux * dy - uy * dx) <= 1e-9 * std::hypot(ux, uy) * std::hypot(dx, dy))
            shown.push_back(k);
        }
        if (shown.empty()) throw Error(ErrorKind::kInvalidSpec, "no class with that direction");
      } else {
        for (std::size_t k = 0; k < spectrum.count(); ++k)
          if (spectrum[k].pairs.size() >= 2) shown.push_back(k);
      }
    } else {
      if (opt.forbidden_index >= n)
        throw Error(ErrorKind::kIndexOutOfRange, "forbidden index out of range");
      shown = forbidden_classes_at(spectrum, opt.forbidden_index);
    }
    for (std::size_t s = 0; s < shown.size(); ++s) {
      const auto& cl = spectrum[shown[s]];
      const char* dash = detail::kDashPatterns[s % detail::kDashPatterns.size()];
      for (const auto& [i, j] : cl.pairs)
        svg.line(xs[i], ys[i], xs[j], ys[j], "class-" + std::to_string(shown[s]), dash, 0.006);
      if (opt.highlight == H::kForbidden) {
        const std::size_t i = opt.forbidden_index;
        const double ux = to_double(cl.direction.dx()), uy = to_double(cl.direction.dy());
        const double len = std::hypot(ux, uy);
        const double reach = 2 * std::max(w, h);
        svg.line(xs[i] - reach * ux / len, ys[i] - reach * uy / len, xs[i] + reach * ux / len,
                 ys[i] + reach * uy / len, "forbidden-line", "1 3", 0.003);
      }
    }
  } else if (opt.highlight == H::kConic) {
    if (n < 5) throw Error(ErrorKind::kTooFewPoints, "conic highlight needs five points");
    std::vector<Point<Approx>> first;
    for (std::size_t i = 0; i < n && first.size() < 5; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (label[k] == i + 1) first.push_back({Approx(xs[k]), Approx(ys[k])});
    const auto conic = conic_through_5<Approx>(first);
    // Sweep lines through first[0]; each direction hits the conic once more.
    const Point<Approx> p0 = first[0];
    const Point<Approx> g = conic.gradient(p0);
    std::string path;
    bool pen = false;
    const int steps = 720;
    for (int t = 0; t <= steps; ++t) {
      const double th = std::numbers::pi * t / steps;
      const double vx = std::cos(th), vy = std::sin(th);
      const double quad = conic.a().value() * vx * vx + conic.b().value() * vx * vy +
                          conic.c().value() * vy * vy;
      const double lin = g.x.value() * vx + g.y.value() * vy;
      if (std::abs(quad) < 1e-12) {
        pen = false;
        continue;
      }
      const double s = -lin / quad;
      const double px = p0.x.value() + s * vx, py = p0.y.value() + s * vy;
      const double slack = std::max(w, h);
      if (px < view_left - slack || px > view_right + slack || py < view_bottom - slack ||
          py > view_top + slack) {
        pen = false;
        continue;
      }
      path += (pen ? " L" : (path.empty() ? "M" : " M")) + detail::SvgWriter::num(px) + " " +
              detail::SvgWriter::num(-py);
      pen = true;
    }
    svg.raw("  <path class=\"conic\" d=\"" + path + "\" fill=\"none\" stroke=\"gray\" stroke-width=\"" +
            detail::SvgWriter::num(0.004 * svg.unit()) + "\"/>\n");
  }

  const double r = 0.012 * svg.unit();
  for (std::size_t i = 0; i < n; ++i) {
    const bool marked = opt.highlight == H::kForbidden && i == opt.forbidden_index;
    svg.raw("  <circle cx=\"" + detail::SvgWriter::num(xs[i]) + "\" cy=\"" +
            detail::SvgWriter::num(-ys[i]) + "\" r=\"" + detail::SvgWriter::num(r) + "\" fill=\"" +
            (marked ? "red" : "black") + "\"/>\n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    double ox = xs[i] - cx, oy = ys[i] - cy;
    const double len = std::hypot(ox, oy);
    if (len > 0) {
      ox /= len;
      oy /= len;
    } else {
      oy = 1;
    }
    const double lx = xs[i] + 3 * r * ox, ly = ys[i] + 3 * r * oy;
    svg.raw("  <text x=\"" + detail::SvgWriter::num(lx) + "\" y=\"" + detail::SvgWriter::num(-ly) +
            "\" font-size=\"" + detail::SvgWriter::num(4 * r) +
            "\" text-anchor=\"middle\" dominant-baseline=\"middle\">A" + std::to_string(label[i]) +
            "</text>\n");
  }
  return svg.finish();
}

}  // namespace slopes
