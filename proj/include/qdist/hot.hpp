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

#ifndef QDIST_HOT_HPP
#define QDIST_HOT_HPP

// The Hiai-Ohya-Tsukuda function
//
//   s(x) = min_{x < r < 1} S( diag(r - x, 1 - r + x) || diag(r, 1 - r) ),
//
// the sharpest lower bound on the relative entropy of two states whose
// (normalized) trace distance is x, together with its closed-form envelopes.

#include <cmath>
#include <string>

#include "qdist/errors.hpp"
#include "qdist/golden_section.hpp"

namespace qdist {

inline constexpr double kHotGuard = 1e-12;
inline constexpr double kHotArgTol = 1e-11;
inline constexpr double kHotInverseTol = 1e-12;

namespace detail {

inline void check_hot_domain(double x) {
  if (!(x >= 0.0 && x < 1.0)) throw Error(Errc::DomainError, "x = " + std::to_string(x) + " not in [0, 1)");
}

/// Binary relative entropy S(diag(r-x, 1-r+x) || diag(r, 1-r)), in log1p form
/// so that the small-x regime keeps full relative precision.
inline double binary_shift_entropy(double r, double x) {
  return (r - x) * std::log1p(-x / r) + (1.0 - r + x) * std::log1p(x / (1.0 - r));
}

}  // namespace detail

struct HotMinimum {
  double value;
  /// Minimizing r of the (r - x, 1 - r + x) vs (r, 1 - r) parameterization.
  double r;
};

/// s(x) together with its minimizer. s(0) = 0 at r = 1/2 without search.
inline HotMinimum hot_minimum(double x) {
  detail::check_hot_domain(x);
  if (x == 0.0) return {0.0, 0.5};
  const double lo = x + kHotGuard;
  const double hi = 1.0 - kHotGuard;
  if (!(lo < hi)) return {detail::binary_shift_entropy(lo, x), lo};
  auto m = golden_section_minimize([x](double r) { return detail::binary_shift_entropy(r, x); }, lo, hi,
                                   kHotArgTol);
  // for x near 1 the infimum is the r -> x limit, -log(1 - x)
  const double at_lower = -std::log1p(-x);
  if (at_lower < m.value) return {at_lower, x};
  return {m.value, m.x};
}

inline double hot_function(double x) { return hot_minimum(x).value; }

/// 2x^2 + (4/9)x^4 + (32/135)x^6.
inline double hot_series(double x) {
  detail::check_hot_domain(x);
  const double x2 = x * x;
  return x2 * (2.0 + x2 * (4.0 / 9.0 + x2 * (32.0 / 135.0)));
}

/// Pinsker's bound 2x^2.
inline double pinsker_lower(double x) {
  detail::check_hot_domain(x);
  return 2.0 * x * x;
}

/// -log(1 - x), the r -> x limit of the minimised expression.
inline double hot_upper(double x) {
  detail::check_hot_domain(x);
  return -std::log1p(-x);
}

/// The x in [0, 1) with s(x) = y. Values of y beyond s(1 - 1e-12) return
/// 1 - 1e-12.
inline double hot_inverse(double y) {
  if (!(y >= 0.0)) throw Error(Errc::DomainError, "hot_inverse needs y >= 0");
  if (y == 0.0) return 0.0;
  const double cap = 1.0 - kHotGuard;
  if (!(hot_function(cap) > y)) return cap;
  return bisect_increasing(hot_function, y, 0.0, cap, kHotInverseTol);
}

}  // namespace qdist

#endif  // QDIST_HOT_HPP
