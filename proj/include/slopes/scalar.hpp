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

// Scalar backends. All geometry in this library is a template over one of
// two scalar types:
//
//   Rational  exact, gcd-reduced GMP rational (boost::multiprecision).
//   Approx    a double that carries its own relative tolerance eps_rel.
//
// Generic code never compares scalars with == directly when the answer is a
// geometric predicate; it goes through near_zero()/same_value() so that the
// exact backend stays exact and the approximate backend applies the
// tolerance rule consistently.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

namespace slopes {

// Expression templates off: generic code uses `auto` freely.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

inline constexpr double kDefaultEps = 1e-9;

// Tolerance-governed real. eps == 0 marks a constant that inherits the
// tolerance of whatever it is combined with.
class Approx {
 public:
  constexpr Approx() = default;
  constexpr Approx(double v) : value_(v) {}  // NOLINT: implicit from literals
  constexpr Approx(int v) : value_(v) {}     // NOLINT
  constexpr Approx(double v, double eps) : value_(v), eps_(eps) {}

  constexpr double value() const { return value_; }
  constexpr double eps() const { return eps_ > 0 ? eps_ : kDefaultEps; }
  constexpr double raw_eps() const { return eps_; }

  friend constexpr Approx operator+(Approx a, Approx b) {
    return {a.value_ + b.value_, std::max(a.eps_, b.eps_)};
  }
  friend constexpr Approx operator-(Approx a, Approx b) {
    return {a.value_ - b.value_, std::max(a.eps_, b.eps_)};
  }
  friend constexpr Approx operator*(Approx a, Approx b) {
    return {a.value_ * b.value_, std::max(a.eps_, b.eps_)};
  }
  friend constexpr Approx operator/(Approx a, Approx b) {
    return {a.value_ / b.value_, std::max(a.eps_, b.eps_)};
  }
  constexpr Approx operator-() const { return {-value_, eps_}; }
  Approx& operator+=(Approx o) { return *this = *this + o; }
  Approx& operator-=(Approx o) { return *this = *this - o; }
  Approx& operator*=(Approx o) { return *this = *this * o; }
  Approx& operator/=(Approx o) { return *this = *this / o; }

  // |a - b| <= eps * max(1, |a|, |b|)
  friend bool operator==(Approx a, Approx b) {
    const double eps = std::max(a.eps_, b.eps_) > 0 ? std::max(a.eps_, b.eps_) : kDefaultEps;
    const double scale = std::max({1.0, std::abs(a.value_), std::abs(b.value_)});
    return std::abs(a.value_ - b.value_) <= eps * scale;
  }
  friend bool operator<(Approx a, Approx b) { return a.value_ < b.value_; }
  friend bool operator>(Approx a, Approx b) { return a.value_ > b.value_; }
  friend bool operator<=(Approx a, Approx b) { return a.value_ <= b.value_; }
  friend bool operator>=(Approx a, Approx b) { return a.value_ >= b.value_; }

  friend std::ostream& operator<<(std::ostream& os, Approx a) { return os << a.value_; }

 private:
  double value_ = 0.0;
  double eps_ = 0.0;
};

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, Rational>;

template <class S>
concept ScalarType = std::is_same_v<S, Rational> || std::is_same_v<S, Approx>;

enum class Backend { kExactRational, kApproxReal };

template <ScalarType S>
constexpr Backend backend_of() {
  return is_exact_v<S> ? Backend::kExactRational : Backend::kApproxReal;
}

inline const char* backend_name(Backend b) {
  return b == Backend::kExactRational ? "rational" : "float";
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(Approx a) { return a.value(); }

inline Rational abs_value(const Rational& r) { return boost::multiprecision::abs(r); }
inline Approx abs_value(Approx a) { return {std::abs(a.value()), a.raw_eps()}; }

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(Approx a) { return (a.value() > 0) - (a.value() < 0); }

// Exact: v == 0. Approx: |v| <= eps * scale, where scale is the magnitude of
// the quantities v was formed from (a norm product, a sum of |terms|, ...).
inline bool near_zero(const Rational& v, const Rational& /*scale*/) { return v.is_zero(); }
inline bool near_zero(Approx v, Approx scale) {
  return std::abs(v.value()) <= std::max(v.eps(), scale.eps()) * std::abs(scale.value());
}

inline bool same_value(const Rational& a, const Rational& b) { return a == b; }
inline bool same_value(Approx a, Approx b) { return a == b; }

inline Approx with_eps(Approx a, double eps) { return {a.value(), eps}; }
inline const Rational& with_eps(const Rational& r, double /*eps*/) { return r; }

inline Approx sqrt_value(Approx a) { return {std::sqrt(a.value()), a.raw_eps()}; }

// Decimal-free textual form used in reports and point files.
inline std::string to_string(const Rational& r) { return r.str(); }

// Shortest round-trip representation that always reads back as a decimal.
inline std::string format_decimal(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

inline std::string to_string(Approx a) { return format_decimal(a.value()); }

}  // namespace slopes
