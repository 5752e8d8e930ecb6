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

#ifndef QDIST_STATE_HPP
#define QDIST_STATE_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "qdist/errors.hpp"
#include "qdist/spectral.hpp"

namespace qdist {

class WeightedStatePair;

/// Positive semidefinite, unit-trace operator.
///
/// Holds the validated matrix together with its clipped spectrum; the support
/// of the state is fixed once here and reused by every measure.
class DensityOperator {
 public:
  const HermitianMatrix& matrix() const { return matrix_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  Index dim() const { return matrix_.dim(); }

  Index rank() const {
    Index r = 0;
    for (Index i = 0; i < spectrum_.dim(); ++i) r += spectrum_.eigenvalues(i) > 0.0 ? 1 : 0;
    return r;
  }

 private:
  DensityOperator(HermitianMatrix m, SpectralDecomposition clipped)
      : matrix_(std::move(m)), spectrum_(std::move(clipped)) {}

  friend DensityOperator validate_density(const HermitianMatrix&, const SpectralOptions&);
  friend class WeightedStatePair;

  HermitianMatrix matrix_;
  SpectralDecomposition spectrum_;
};

inline DensityOperator validate_density(const HermitianMatrix& m, const SpectralOptions& opts = {}) {
  SpectralDecomposition d = spectral_decompose(m);
  const double lmin = d.eigenvalues.minCoeff();
  if (lmin < -opts.psd_tolerance) {
    throw Error(Errc::NotPositive, "smallest eigenvalue " + std::to_string(lmin));
  }
  const double tr = m.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error(Errc::TraceNotOne, "trace is " + std::to_string(tr));
  }
  return DensityOperator(m, clip_to_support(std::move(d), opts));
}

/// Eigenvalues of two PSD operators together with the squared moduli of the
/// overlaps of their eigenvectors, W(i,j) = |<u_i|v_j>|^2.
///
/// tr(A^s B^{1-s}) = sum_ij a_i^s b_j^{1-s} W(i,j) restricted to the supports,
/// which encodes the 0^t := 0 convention at both endpoints s = 0 and s = 1.
class JointSpectrum {
 public:
  JointSpectrum(const SpectralDecomposition& a, const SpectralDecomposition& b)
      : a_(a.eigenvalues), b_(b.eigenvalues), cross_(a.eigenvectors.adjoint() * b.eigenvectors) {
    weights_ = cross_.cwiseAbs2();
    const Index n = a_.size();
    log_a_ = RealVector::Zero(n);
    log_b_ = RealVector::Zero(n);
    for (Index i = 0; i < n; ++i) {
      if (a_(i) > 0.0) log_a_(i) = std::log(a_(i));
      if (b_(i) > 0.0) log_b_(i) = std::log(b_(i));
    }
    support_overlap_ = 0.0;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (a_(i) > 0.0 && b_(j) > 0.0) support_overlap_ += weights_(i, j);
      }
    }
  }

  const RealVector& a() const { return a_; }
  const RealVector& b() const { return b_; }
  /// U* V for the eigenvector bases of the two operators.
  const ComplexMatrix& cross() const { return cross_; }
  const Eigen::MatrixXd& weights() const { return weights_; }

  /// tr(P_A P_B); zero exactly when the supports are orthogonal.
  double support_overlap() const { return support_overlap_; }

  /// tr(A^s B^{1-s}) for s in [0, 1].
  double trace_power(double s) const {
    const Index n = a_.size();
    double acc = 0.0;
    for (Index i = 0; i < n; ++i) {
      if (a_(i) <= 0.0) continue;
      for (Index j = 0; j < n; ++j) {
        if (b_(j) <= 0.0) continue;
        acc += weights_(i, j) * std::exp(s * log_a_(i) + (1.0 - s) * log_b_(j));
      }
    }
    return acc;
  }

  /// tr(A^{1/2} ... ) building block: the matrix diag(sqrt a) U*V diag(sqrt b),
  /// unitarily equivalent to A^{1/2} B^{1/2}.
  ComplexMatrix sqrt_product() const {
    const RealVector sa = a_.cwiseSqrt();
    const RealVector sb = b_.cwiseSqrt();
    return sa.cast<Complex>().asDiagonal() * cross_ * sb.cast<Complex>().asDiagonal();
  }

 private:
  RealVector a_, b_, log_a_, log_b_;
  ComplexMatrix cross_;
  Eigen::MatrixXd weights_;
  double support_overlap_ = 0.0;
};

/// (A, B) = (p rho, (1-p) sigma) with tr A + tr B = 1.
///
/// When built from raw operators with tr A = 0 (or tr B = 0) the normalized
/// state on that side does not exist and normalized-only quantities raise
/// DomainMismatch.
class WeightedStatePair {
 public:
  /// The non-normalized setting: PSD A, B with tr A + tr B = 1.
  static WeightedStatePair from_operators(const HermitianMatrix& a, const HermitianMatrix& b,
                                          const SpectralOptions& opts = {}) {
    if (a.dim() != b.dim()) throw Error(Errc::DomainMismatch, "operators have different dimensions");
    const double ta = a.trace(), tb = b.trace();
    if (std::abs(ta + tb - 1.0) > kTraceTol) {
      throw Error(Errc::TraceNotOne, "tr A + tr B = " + std::to_string(ta + tb));
    }
    SpectralDecomposition sa = psd_spectrum(a, opts);
    SpectralDecomposition sb = psd_spectrum(b, opts);
    return WeightedStatePair(a, b, std::move(sa), std::move(sb), ta);
  }

  const HermitianMatrix& a() const { return a_; }
  const HermitianMatrix& b() const { return b_; }
  const SpectralDecomposition& a_spectrum() const { return a_spectrum_; }
  const SpectralDecomposition& b_spectrum() const { return b_spectrum_; }
  const JointSpectrum& joint() const { return joint_; }
  double prior() const { return prior_; }
  Index dim() const { return a_.dim(); }

  bool has_states() const { return rho_.has_value() && sigma_.has_value(); }

  const DensityOperator& rho() const {
    if (!rho_) throw Error(Errc::DomainMismatch, "pair has no normalized rho (tr A = 0)");
    return *rho_;
  }
  const DensityOperator& sigma() const {
    if (!sigma_) throw Error(Errc::DomainMismatch, "pair has no normalized sigma (tr B = 0)");
    return *sigma_;
  }

  /// The same states under the uniform prior.
  WeightedStatePair normalized() const { return WeightedStatePair(rho(), sigma(), 0.5); }

  /// (sigma, rho, 1 - p); every symmetric measure is invariant under this.
  WeightedStatePair swapped() const {
    return WeightedStatePair(b_, a_, b_spectrum_, a_spectrum_, 1.0 - prior_, sigma_, rho_);
  }

 private:
  friend WeightedStatePair make_weighted_pair(const DensityOperator&, const DensityOperator&, double);

  WeightedStatePair(DensityOperator rho, DensityOperator sigma, double prior)
      : a_(prior * rho.matrix()),
        b_((1.0 - prior) * sigma.matrix()),
        a_spectrum_(scaled(rho.spectrum(), prior)),
        b_spectrum_(scaled(sigma.spectrum(), 1.0 - prior)),
        prior_(prior),
        joint_(a_spectrum_, b_spectrum_),
        rho_(std::move(rho)),
        sigma_(std::move(sigma)) {}

  WeightedStatePair(HermitianMatrix a, HermitianMatrix b, SpectralDecomposition sa, SpectralDecomposition sb,
                    double prior)
      : a_(std::move(a)),
        b_(std::move(b)),
        a_spectrum_(std::move(sa)),
        b_spectrum_(std::move(sb)),
        prior_(prior),
        joint_(a_spectrum_, b_spectrum_),
        rho_(normalize(a_, a_spectrum_)),
        sigma_(normalize(b_, b_spectrum_)) {}

  WeightedStatePair(HermitianMatrix a, HermitianMatrix b, SpectralDecomposition sa, SpectralDecomposition sb,
                    double prior, std::optional<DensityOperator> rho, std::optional<DensityOperator> sigma)
      : a_(std::move(a)),
        b_(std::move(b)),
        a_spectrum_(std::move(sa)),
        b_spectrum_(std::move(sb)),
        prior_(prior),
        joint_(a_spectrum_, b_spectrum_),
        rho_(std::move(rho)),
        sigma_(std::move(sigma)) {}

  static SpectralDecomposition scaled(SpectralDecomposition d, double c) {
    d.eigenvalues *= c;
    return d;
  }

  static std::optional<DensityOperator> normalize(const HermitianMatrix& m, const SpectralDecomposition& d) {
    const double tr = d.eigenvalues.sum();
    if (!(tr > 0.0)) return std::nullopt;
    return DensityOperator((1.0 / tr) * m, scaled(d, 1.0 / tr));
  }

  HermitianMatrix a_, b_;
  SpectralDecomposition a_spectrum_, b_spectrum_;
  double prior_;
  JointSpectrum joint_;
  std::optional<DensityOperator> rho_, sigma_;
};

inline WeightedStatePair make_weighted_pair(const DensityOperator& rho, const DensityOperator& sigma, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidPrior, "prior must lie in [0, 1]");
  if (rho.dim() != sigma.dim()) {
    throw Error(Errc::DomainMismatch, "rho is " + std::to_string(rho.dim()) + "-dimensional, sigma is " +
                                          std::to_string(sigma.dim()) + "-dimensional");
  }
  return WeightedStatePair(rho, sigma, p);
}

}  // namespace qdist

#endif  // QDIST_STATE_HPP
