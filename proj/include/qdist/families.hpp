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

#ifndef QDIST_FAMILIES_HPP
#define QDIST_FAMILIES_HPP

// One-parameter families of state pairs on which the inequalities of the
// catalog become equalities, with their closed-form measure values.
//
//   (a) rho = diag(1, 0),          sigma = diag(t, 1 - t)
//   (b) rho = |0><0|,              sigma = |phi><phi|, phi = (sqrt t, sqrt(1 - t))
//   (c) rho = diag(1 - t, t, 0),   sigma = diag(1 - t, 0, t)
//   (d) rho = diag(1 - t, t),      sigma = diag(t, 1 - t)

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "qdist/errors.hpp"
#include "qdist/extended_real.hpp"
#include "qdist/measures.hpp"
#include "qdist/spectral.hpp"
#include "qdist/state.hpp"

namespace qdist {

enum class Family { A, B, C, D };

inline constexpr std::array<Family, 4> kAllFamilies = {Family::A, Family::B, Family::C, Family::D};

inline char family_letter(Family f) { return static_cast<char>('a' + static_cast<int>(f)); }

inline std::optional<Family> parse_family(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  const char c = static_cast<char>(s[0] | 0x20);
  if (c < 'a' || c > 'd') return std::nullopt;
  return static_cast<Family>(c - 'a');
}

struct FamilyPoint {
  Family family;
  double t;
  DensityOperator rho;
  DensityOperator sigma;
  /// Closed-form values at the uniform prior. `expected.s_star` is meaningful
  /// only when `s_star_unique` is set; elsewhere Q_s is flat or degenerate.
  MeasureReport expected;
  bool s_star_unique = false;
};

inline FamilyPoint family_point(Family family, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(Errc::ParamOutOfRange, "t = " + std::to_string(t) + " not in [0, 1]");
  const double u = 1.0 - t;
  MeasureReport e;
  bool unique = false;
  ComplexMatrix rho, sigma;

  switch (family) {
    case Family::A: {
      rho = HermitianMatrix::diagonal({1.0, 0.0}).matrix();
      sigma = HermitianMatrix::diagonal({t, u}).matrix();
      e.overlap = t;
      e.trace_distance = u;
      e.fidelity = std::sqrt(t);
      e.hellinger = std::sqrt(t);
      e.q_min = t;
      e.s_star = 0.0;
      unique = t > 0.0 && t < 1.0;
      e.chernoff = neg_log(t);
      e.relative_entropy = neg_log(t);
      break;
    }
    case Family::B: {
      const double c = std::sqrt(t), s = std::sqrt(u);
      rho = HermitianMatrix::diagonal({1.0, 0.0}).matrix();
      sigma = ComplexMatrix(2, 2);
      sigma << c * c, c * s, c * s, s * s;
      e.overlap = t;
      e.trace_distance = std::sqrt(u);
      e.fidelity = std::sqrt(t);
      e.hellinger = t;
      e.q_min = t;
      e.chernoff = neg_log(t);
      e.relative_entropy = t == 1.0 ? ExtendedReal(0.0) : ExtendedReal::infinity();
      break;
    }
    case Family::C: {
      rho = HermitianMatrix::diagonal({u, t, 0.0}).matrix();
      sigma = HermitianMatrix::diagonal({u, 0.0, t}).matrix();
      e.overlap = u * u;
      e.trace_distance = t;
      e.fidelity = u;
      e.hellinger = u;
      e.q_min = u;
      e.chernoff = neg_log(u);
      e.relative_entropy = t == 0.0 ? ExtendedReal(0.0) : ExtendedReal::infinity();
      break;
    }
    case Family::D: {
      rho = HermitianMatrix::diagonal({u, t}).matrix();
      sigma = HermitianMatrix::diagonal({t, u}).matrix();
      const double f = 2.0 * std::sqrt(t * u);
      e.overlap = 2.0 * t * u;
      e.trace_distance = std::abs(1.0 - 2.0 * t);
      e.fidelity = f;
      e.hellinger = f;
      e.q_min = f;
      e.s_star = 0.5;
      unique = t > 0.0 && t < 1.0 && t != 0.5;
      e.chernoff = neg_log(f);
      e.relative_entropy = (t == 0.0 || t == 1.0) ? ExtendedReal::infinity()
                                                  : ExtendedReal((2.0 * t - 1.0) * std::log(t / u));
      break;
    }
  }
  return FamilyPoint{family, t, validate_density(HermitianMatrix(std::move(rho))),
                     validate_density(HermitianMatrix(std::move(sigma))), e, unique};
}

}  // namespace qdist

#endif  // QDIST_FAMILIES_HPP
