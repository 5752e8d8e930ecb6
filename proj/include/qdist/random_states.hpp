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

#ifndef QDIST_RANDOM_STATES_HPP
#define QDIST_RANDOM_STATES_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "qdist/errors.hpp"
#include "qdist/spectral.hpp"
#include "qdist/state.hpp"

namespace qdist {

/// SplitMix64 finaliser; used to derive independent sub-seeds.
inline constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix_seed(mix_seed(base) ^ mix_seed(stream + 0x632be59bd9b4e019ULL));
}

/// Seeded generator with a platform-independent integer stream.
///
/// mt19937_64 is fully specified by the standard; the real-valued
/// distributions of <random> are not, so uniforms and Gaussians are derived
/// here by hand (53-bit mantissa, Box-Muller).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi]; the modulo bias is irrelevant at these ranges.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
  }

  ComplexMatrix ginibre(Index rows, Index cols) {
    ComplexMatrix g(rows, cols);
    for (Index j = 0; j < cols; ++j) {
      for (Index i = 0; i < rows; ++i) g(i, j) = complex_normal();
    }
    return g;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// rho = G G* / tr(G G*) for a dim x rank Ginibre matrix G.
inline DensityOperator random_mixed(Index dim, Index rank, std::uint64_t seed) {
  if (dim < 1) throw Error(Errc::InvalidRank, "dimension must be >= 1");
  if (rank < 1 || rank > dim) {
    throw Error(Errc::InvalidRank, "rank " + std::to_string(rank) + " not in [1, " + std::to_string(dim) + "]");
  }
  Rng rng(seed);
  const ComplexMatrix g = rng.ginibre(dim, rank);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate_density(HermitianMatrix::trusted(std::move(rho)));
}

/// Rank-one projector onto a normalized complex Gaussian vector.
inline DensityOperator random_pure(Index dim, std::uint64_t seed) { return random_mixed(dim, 1, seed); }

}  // namespace qdist

#endif  // QDIST_RANDOM_STATES_HPP
