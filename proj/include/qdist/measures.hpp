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

#ifndef QDIST_MEASURES_HPP
#define QDIST_MEASURES_HPP

// Distinguishability measures of a prior-weighted pair (A, B) = (p rho, (1-p) sigma):
//
//   overlap            L   = 4 tr AB
//   trace distance     T   = ||A - B||_1
//   fidelity           F   = 2 ||A^{1/2} B^{1/2}||_1
//   Renyi overlap      Q_s = 2 tr A^s B^{1-s}
//   Hellinger affinity Q   = Q_{1/2}
//   minimal overlap    Q_min = min_{s in [0,1]} Q_s
//
// At p = 1/2 these are the usual quantities of the normalized states. The
// Chernoff distance C and the relative entropy S are defined for the
// normalized states only.

#include <cmath>
#include <string>

#include "qdist/errors.hpp"
#include "qdist/extended_real.hpp"
#include "qdist/golden_section.hpp"
#include "qdist/spectral.hpp"
#include "qdist/state.hpp"

namespace qdist {

inline constexpr double kRenyiArgTol = 1e-8;

struct RenyiMinimum {
  double value;
  double s_star;
  /// Orthogonal supports: the trace vanishes for every s.
  bool degenerate = false;
};

struct MeasureReport {
  double overlap = 0.0;
  double trace_distance = 0.0;
  double fidelity = 0.0;
  double hellinger = 0.0;
  double q_min = 0.0;
  double s_star = 0.5;
  ExtendedReal chernoff;
  ExtendedReal relative_entropy;
};

namespace detail {

inline void check_s(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error(Errc::DomainError, "s = " + std::to_string(s) + " not in [0, 1]");
}

/// Minimum of s -> tr(A^s B^{1-s}) over [0, 1]. The log of this function is
/// convex, so it is unimodal and golden-section search on the log applies;
/// the endpoints are compared explicitly.
inline RenyiMinimum minimize_trace_power(const JointSpectrum& joint) {
  if (joint.support_overlap() == 0.0) return {0.0, 0.5, true};
  auto log_trace = [&](double s) { return std::log(joint.trace_power(s)); };
  const auto m = golden_section_minimize(log_trace, 0.0, 1.0, kRenyiArgTol);
  return {joint.trace_power(m.x), m.x, false};
}

}  // namespace detail

inline double overlap(const WeightedStatePair& pair) {
  return 4.0 * pair.a().matrix().cwiseProduct(pair.b().matrix().transpose()).sum().real();
}

inline double trace_distance(const WeightedStatePair& pair) { return trace_norm(pair.a() - pair.b()); }

inline double fidelity(const WeightedStatePair& pair) {
  return 2.0 * singular_values(pair.joint().sqrt_product()).sum();
}

inline double renyi_overlap(const WeightedStatePair& pair, double s) {
  detail::check_s(s);
  return 2.0 * pair.joint().trace_power(s);
}

inline double hellinger_affinity(const WeightedStatePair& pair) { return renyi_overlap(pair, 0.5); }

/// Q_min of the weighted pair and its argmin.
inline RenyiMinimum min_renyi_overlap(const WeightedStatePair& pair) {
  RenyiMinimum m = detail::minimize_trace_power(pair.joint());
  m.value *= 2.0;
  return m;
}

/// C = -log min_s tr(rho^s sigma^{1-s}); +inf for orthogonal supports.
inline ExtendedReal chernoff_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  const RenyiMinimum m = detail::minimize_trace_power(JointSpectrum(rho.spectrum(), sigma.spectrum()));
  // Q_s <= 1 for states; rounding above 1 would give C slightly below 0
  return m.degenerate ? ExtendedReal::infinity() : neg_log(std::min(m.value, 1.0));
}

/// psi(s) = log tr(rho^s sigma^{1-s}); -inf when the trace vanishes.
inline ExtendedReal log_trace_power(const DensityOperator& rho, const DensityOperator& sigma, double s) {
  detail::check_s(s);
  const double tr = JointSpectrum(rho.spectrum(), sigma.spectrum()).trace_power(s);
  return tr > 0.0 ? ExtendedReal(std::log(tr)) : ExtendedReal::neg_infinity();
}

/// S(rho || sigma) = tr rho (log rho - log sigma) with 0 log 0 = 0.
///
/// Infinite when rho puts more than dim * cutoff weight on the kernel of sigma.
inline ExtendedReal relative_entropy(const DensityOperator& rho, const DensityOperator& sigma,
                                     const SpectralOptions& opts = {}) {
  if (rho.dim() != sigma.dim()) throw Error(Errc::DomainMismatch, "states have different dimensions");
  const JointSpectrum joint(rho.spectrum(), sigma.spectrum());
  const RealVector& r = joint.a();
  const RealVector& q = joint.b();
  const auto& w = joint.weights();
  const Index n = r.size();

  double kernel_weight = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (q(j) <= 0.0) kernel_weight += r(i) * w(i, j);
    }
  }
  if (kernel_weight > support_cutoff(q, opts) * static_cast<double>(n)) return ExtendedReal::infinity();

  double s = 0.0;
  for (Index i = 0; i < n; ++i) {
    if (r(i) <= 0.0) continue;
    const double log_r = std::log(r(i));
    for (Index j = 0; j < n; ++j) {
      if (q(j) <= 0.0) continue;
      s += r(i) * w(i, j) * (log_r - std::log(q(j)));
    }
  }
  return ExtendedReal(s);
}

/// Every measure of the pair. Chernoff distance and relative entropy are taken
/// from the normalized states.
inline MeasureReport measure_report(const WeightedStatePair& pair) {
  MeasureReport r;
  r.overlap = overlap(pair);
  r.trace_distance = trace_distance(pair);
  r.fidelity = fidelity(pair);
  r.hellinger = hellinger_affinity(pair);
  const RenyiMinimum m = min_renyi_overlap(pair);
  r.q_min = m.value;
  r.s_star = m.s_star;
  r.chernoff = chernoff_distance(pair.rho(), pair.sigma());
  r.relative_entropy = relative_entropy(pair.rho(), pair.sigma());
  return r;
}

}  // namespace qdist

#endif  // QDIST_MEASURES_HPP
