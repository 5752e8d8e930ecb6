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

#ifndef QDIST_GOLDEN_SECTION_HPP
#define QDIST_GOLDEN_SECTION_HPP

#include <cmath>

namespace qdist {

template <class T>
struct ScalarMinimum {
  double x;
  T value;
};

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
///
/// Stops once the bracket is narrower than `tol`. The interior result is then
/// compared with both endpoints, so minima sitting on the boundary (kinks of
/// convex functions restricted to an interval) are returned exactly. `Value`
/// only needs `operator<`, which lets callers minimise extended reals.
template <class Fn>
auto golden_section_minimize(Fn&& f, double lo, double hi, double tol, int max_iter = 200)
    -> ScalarMinimum<decltype(f(lo))> {
  using Value = decltype(f(lo));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  Value fc = f(c);
  Value fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }

  ScalarMinimum<Value> best = fc < fd ? ScalarMinimum<Value>{c, fc} : ScalarMinimum<Value>{d, fd};
  const double mid = 0.5 * (a + b);
  const Value fmid = f(mid);
  if (fmid < best.value) best = {mid, fmid};
  // ties keep the interior point
  const Value flo = f(lo);
  if (flo < best.value) best = {lo, flo};
  const Value fhi = f(hi);
  if (fhi < best.value) best = {hi, fhi};
  return best;
}

/// Bisection for the x in [lo, hi] with f(x) = target, f non-decreasing.
template <class Fn>
double bisect_increasing(Fn&& f, double target, double lo, double hi, double tol, int max_iter = 200) {
  for (int it = 0; it < max_iter && (hi - lo) > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qdist

#endif  // QDIST_GOLDEN_SECTION_HPP
