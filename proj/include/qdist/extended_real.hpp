// Copyright 2026 The qdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDIST_EXTENDED_REAL_HPP
#define QDIST_EXTENDED_REAL_HPP

#include <cmath>
#include <compare>
#include <cstdio>
#include <string>

namespace qdist {

/// A real number or one of the two infinities, kept as an explicit tag.
///
/// Finite values never carry a tag, so comparisons against infinity are exact
/// and independent of IEEE overflow behaviour. Use the named constructors;
/// constructing from a non-finite double maps +inf/-inf onto the tags.
class ExtendedReal {
 public:
  enum class Kind { Finite, PosInf, NegInf };

  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double v) : kind_(classify(v)), value_(kind_ == Kind::Finite ? v : 0.0) {}  // NOLINT

  static constexpr ExtendedReal infinity() { return ExtendedReal(Kind::PosInf); }
  static constexpr ExtendedReal neg_infinity() { return ExtendedReal(Kind::NegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Finite value, or +-HUGE_VAL for the infinities.
  constexpr double value() const {
    switch (kind_) {
      case Kind::PosInf: return HUGE_VAL;
      case Kind::NegInf: return -HUGE_VAL;
      default: return value_;
    }
  }

  constexpr ExtendedReal operator-() const {
    switch (kind_) {
      case Kind::PosInf: return neg_infinity();
      case Kind::NegInf: return infinity();
      default: return ExtendedReal(-value_);
    }
  }

  friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }

  friend constexpr std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.kind_ == b.kind_) {
      if (a.kind_ != Kind::Finite) return std::partial_ordering::equivalent;
      return a.value_ <=> b.value_;
    }
    return rank(a.kind_) <=> rank(b.kind_);
  }

  /// Renders with `digits` significant digits; infinities as `inf` / `-inf`.
  std::string to_string(int digits = 12) const {
    if (kind_ == Kind::PosInf) return "inf";
    if (kind_ == Kind::NegInf) return "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value_);
    return buf;
  }

 private:
  constexpr explicit ExtendedReal(Kind k) : kind_(k) {}

  static constexpr Kind classify(double v) {
    if (v == HUGE_VAL) return Kind::PosInf;
    if (v == -HUGE_VAL) return Kind::NegInf;
    return Kind::Finite;
  }
  static constexpr int rank(Kind k) { return k == Kind::NegInf ? 0 : (k == Kind::Finite ? 1 : 2); }

  Kind kind_ = Kind::Finite;
  double value_ = 0.0;
};

/// rhs - lhs for inequality bookkeeping. When rhs is +inf the difference is
/// +inf regardless of lhs; when lhs is +inf (and rhs is not) it is -inf.
inline ExtendedReal slack_between(const ExtendedReal& lhs, const ExtendedReal& rhs) {
  if (rhs.is_pos_inf() || lhs.is_neg_inf()) return ExtendedReal::infinity();
  if (lhs.is_pos_inf() || rhs.is_neg_inf()) return ExtendedReal::neg_infinity();
  return ExtendedReal(rhs.value() - lhs.value());
}

/// -log(x) for x >= 0, with -log(0) = +inf.
inline ExtendedReal neg_log(double x) {
  if (x <= 0.0) return ExtendedReal::infinity();
  // + 0.0 turns -log(1) = -0 into +0
  return ExtendedReal(-std::log(x) + 0.0);
}

/// exp on the extended line: exp(-inf) = 0, exp(+inf) = +inf.
inline ExtendedReal exp_extended(const ExtendedReal& x) {
  if (x.is_neg_inf()) return ExtendedReal(0.0);
  if (x.is_pos_inf()) return ExtendedReal::infinity();
  return ExtendedReal(std::exp(x.value()));
}

inline ExtendedReal scale(const ExtendedReal& x, double factor) {
  if (x.is_finite()) return ExtendedReal(x.value() * factor);
  if (factor == 0.0) return ExtendedReal(0.0);
  return factor > 0 ? x : -x;
}

}  // namespace qdist

#endif  // QDIST_EXTENDED_REAL_HPP
