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


// Reference computations that avoid the library's kernels: plain dense
// matrix products, Eigen's own eigensolver and brute-force grids.

#ifndef QDIST_TESTS_ORACLES_HPP
#define QDIST_TESTS_ORACLES_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "qdist/qdist.hpp"

namespace qdist::oracle {

/// P^t for a PSD matrix, computed densely with eigenvalues <= floor set to 0.
inline ComplexMatrix dense_power(const ComplexMatrix& p, double t, double floor = 1e-13) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p);
  RealVector ev = es.eigenvalues();
  for (Index i = 0; i < ev.size(); ++i) ev(i) = ev(i) > floor ? std::pow(ev(i), t) : 0.0;
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

inline ComplexMatrix dense_log(const ComplexMatrix& p, double floor = 1e-13) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p);
  RealVector ev = es.eigenvalues();
  for (Index i = 0; i < ev.size(); ++i) ev(i) = ev(i) > floor ? std::log(ev(i)) : 0.0;
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

/// tr A^s B^{1-s} by explicit matrix products.
inline double trace_power(const ComplexMatrix& a, const ComplexMatrix& b, double s) {
  return (dense_power(a, s) * dense_power(b, 1.0 - s)).trace().real();
}

/// Singular values as square roots of the eigenvalues of M* M, descending.
inline RealVector singular_values_gram(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m.adjoint() * m);
  RealVector ev = es.eigenvalues().reverse();
  return ev.cwiseMax(0.0).cwiseSqrt();
}

inline double schatten(const ComplexMatrix& m, double q) {
  const RealVector s = singular_values_gram(m);
  double acc = 0.0;
  for (Index i = 0; i < s.size(); ++i) acc += std::pow(s(i), q);
  return std::pow(acc, 1.0 / q);
}

/// ||A - B||_1 from the eigenvalues of the difference.
inline double trace_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a - b);
  return es.eigenvalues().cwiseAbs().sum();
}

/// 2 tr sqrt(sqrt(A) B sqrt(A)).
inline double fidelity(const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix ra = dense_power(a, 0.5);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(ra * b * ra);
  return 2.0 * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
}

/// min over a uniform grid of 2 tr A^s B^{1-s}, s in [0, 1].
inline double grid_q_min(const ComplexMatrix& a, const ComplexMatrix& b, int points = 1001) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < points; ++k) best = std::min(best, 2.0 * trace_power(a, b, double(k) / (points - 1)));
  return best;
}

/// tr rho (log rho - log sigma), finite inputs only.
inline double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  return (rho * (dense_log(rho) - dense_log(sigma))).trace().real();
}

inline HermitianMatrix random_hermitian(Rng& rng, Index n) {
  const ComplexMatrix g = rng.ginibre(n, n);
  return HermitianMatrix(g + g.adjoint());
}

inline HermitianMatrix random_psd(Rng& rng, Index n, Index rank) {
  const ComplexMatrix g = rng.ginibre(n, rank);
  return HermitianMatrix(g * g.adjoint());
}

/// Random pair with random dimension in [lo, hi] and optional rank deficiency.
inline WeightedStatePair random_pair(std::uint64_t seed, Index dim, bool full_rank = true, double prior = 0.5) {
  Rng rng(seed);
  const Index r1 = full_rank ? dim : rng.uniform_int(1, dim);
  const Index r2 = full_rank ? dim : rng.uniform_int(1, dim);
  return make_weighted_pair(random_mixed(dim, r1, rng.next_u64()), random_mixed(dim, r2, rng.next_u64()), prior);
}

/// Commuting pair: both diagonal in the same random unitary basis.
inline WeightedStatePair random_commuting_pair(std::uint64_t seed, Index dim) {
  Rng rng(seed);
  Eigen::HouseholderQR<ComplexMatrix> qr(rng.ginibre(dim, dim));
  const ComplexMatrix u = qr.householderQ();
  auto diag_state = [&] {
    RealVector d(dim);
    for (Index i = 0; i < dim; ++i) d(i) = rng.uniform() + 0.01;
    d /= d.sum();
    return validate_density(HermitianMatrix(u * d.cast<Complex>().asDiagonal() * u.adjoint()));
  };
  const DensityOperator rho = diag_state();
  const DensityOperator sigma = diag_state();
  return make_weighted_pair(rho, sigma, 0.5);
}

}  // namespace qdist::oracle

#endif  // QDIST_TESTS_ORACLES_HPP
