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

#ifndef QDIST_SPECTRAL_HPP
#define QDIST_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdist/errors.hpp"

namespace qdist {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kReconstructionTolPerDim = 1e-11;

/// Complex Hermitian operator of dimension >= 1.
///
/// The constructor checks conj-symmetry against `tol` (scaled by the largest
/// entry when that exceeds 1) and stores the exactly Hermitian part
/// (M + M*)/2, so downstream code never sees the asymmetric residue.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix m, double tol = kHermitianTol) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
      throw Error(Errc::NonSquare, "matrix is " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
    }
    if (m_.rows() == 0) throw Error(Errc::NonSquare, "matrix is empty");
    if (!m_.allFinite()) throw Error(Errc::NonHermitianInput, "matrix has non-finite entries");
    const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
    const double asym = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > tol * scale) {
      throw Error(Errc::NonHermitianInput, "max |M - M*| = " + std::to_string(asym));
    }
    symmetrize();
  }

  static HermitianMatrix identity(Index n) { return HermitianMatrix(ComplexMatrix::Identity(n, n)); }

  static HermitianMatrix diagonal(std::span<const double> d) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Index>(i), static_cast<Index>(i)) = d[i];
    return HermitianMatrix(std::move(m));
  }
  static HermitianMatrix diagonal(std::initializer_list<double> d) {
    return diagonal(std::span<const double>(d.begin(), d.size()));
  }

  /// Wraps a matrix that is Hermitian by construction (up to rounding).
  static HermitianMatrix trusted(ComplexMatrix m) {
    HermitianMatrix h;
    h.m_ = std::move(m);
    h.symmetrize();
    return h;
  }

  Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return trusted(a.m_ + b.m_);
  }
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    return trusted(a.m_ - b.m_);
  }
  friend HermitianMatrix operator*(double c, const HermitianMatrix& a) { return trusted(c * a.m_); }

 private:
  HermitianMatrix() = default;

  void symmetrize() {
    ComplexMatrix herm = (m_ + m_.adjoint()) * 0.5;
    m_ = std::move(herm);
  }

  ComplexMatrix m_;
};

/// Eigensystem with eigenvalues sorted descending and orthonormal eigenvector columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  Index dim() const { return eigenvalues.size(); }

  ComplexMatrix reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  }
};

/// Knobs for the support conventions. When `support_cutoff` is empty the
/// cutoff is dim * machine_epsilon * max(|lambda_max|, 1).
struct SpectralOptions {
  std::optional<double> support_cutoff;
  double psd_tolerance = kPsdTol;
};

inline SpectralDecomposition spectral_decompose(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::NumericalFailure, "Hermitian eigensolver did not converge");
  }
  const RealVector& w = solver.eigenvalues();
  const Index n = w.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return w(a) > w(b); });

  SpectralDecomposition out{RealVector(n), ComplexMatrix(n, n)};
  for (Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = w(order[static_cast<std::size_t>(k)]);
    out.eigenvectors.col(k) = solver.eigenvectors().col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

inline double support_cutoff(const RealVector& eigenvalues, const SpectralOptions& opts = {}) {
  if (opts.support_cutoff) return *opts.support_cutoff;
  const double lmax = eigenvalues.size() ? eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  return static_cast<double>(eigenvalues.size()) * std::numeric_limits<double>::epsilon() * std::max(lmax, 1.0);
}

/// Positive semidefinite view of a decomposition: eigenvalues at or below the
/// support cutoff become exactly zero. Throws NegativeEigenvalue when some
/// eigenvalue is below -psd_tolerance.
inline SpectralDecomposition clip_to_support(SpectralDecomposition d, const SpectralOptions& opts = {}) {
  if (d.dim() > 0 && d.eigenvalues.minCoeff() < -opts.psd_tolerance) {
    throw Error(Errc::NegativeEigenvalue, "eigenvalue " + std::to_string(d.eigenvalues.minCoeff()) +
                                              " below -" + std::to_string(opts.psd_tolerance));
  }
  const double cut = support_cutoff(d.eigenvalues, opts);
  for (Index i = 0; i < d.dim(); ++i) {
    if (d.eigenvalues(i) <= cut) d.eigenvalues(i) = 0.0;
  }
  return d;
}

inline SpectralDecomposition psd_spectrum(const HermitianMatrix& p, const SpectralOptions& opts = {}) {
  return clip_to_support(spectral_decompose(p), opts);
}

/// Sum of f(lambda) v v* over the strictly positive eigenvalues of a clipped
/// decomposition. Everything outside the support maps to zero.
template <class Fn>
HermitianMatrix apply_on_support(const SpectralDecomposition& clipped, Fn&& f) {
  const Index n = clipped.dim();
  RealVector fv = RealVector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    if (clipped.eigenvalues(i) > 0.0) fv(i) = f(clipped.eigenvalues(i));
  }
  return HermitianMatrix::trusted(clipped.eigenvectors * fv.cast<Complex>().asDiagonal() *
                                  clipped.eigenvectors.adjoint());
}

/// P^t for PSD P and t in (0, 2], with 0^t := 0.
inline HermitianMatrix fractional_power(const HermitianMatrix& p, double t, const SpectralOptions& opts = {}) {
  if (!(t > 0.0 && t <= 2.0)) throw Error(Errc::InvalidExponent, "exponent must lie in (0, 2]");
  return apply_on_support(psd_spectrum(p, opts), [t](double x) { return std::pow(x, t); });
}

/// log P on the support of P, zero on its kernel.
inline HermitianMatrix log_on_support(const HermitianMatrix& p, const SpectralOptions& opts = {}) {
  return apply_on_support(psd_spectrum(p, opts), [](double x) { return std::log(x); });
}

/// Orthogonal projector onto the range of a PSD matrix.
inline HermitianMatrix support_projector(const HermitianMatrix& p, const SpectralOptions& opts = {}) {
  return apply_on_support(psd_spectrum(p, opts), [](double) { return 1.0; });
}

struct JordanParts {
  HermitianMatrix positive;
  HermitianMatrix negative;
};

/// H = H_+ - H_- with H_+ H_- = 0, both parts PSD.
inline JordanParts jordan_parts(const HermitianMatrix& h) {
  const SpectralDecomposition d = spectral_decompose(h);
  RealVector pos = d.eigenvalues.cwiseMax(0.0);
  RealVector neg = (-d.eigenvalues).cwiseMax(0.0);
  const ComplexMatrix& v = d.eigenvectors;
  return {HermitianMatrix::trusted(v * pos.cast<Complex>().asDiagonal() * v.adjoint()),
          HermitianMatrix::trusted(v * neg.cast<Complex>().asDiagonal() * v.adjoint())};
}

/// Singular values of a square complex matrix, descending.
inline RealVector singular_values(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::NonSquare, "singular_values needs a square matrix");
  if (!m.allFinite()) throw Error(Errc::NumericalFailure, "non-finite matrix entries");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  RealVector s = svd.singularValues();
  if (!s.allFinite()) throw Error(Errc::NumericalFailure, "SVD produced non-finite values");
  return s;
}

/// For Hermitian input the singular values are the sorted |eigenvalues|.
inline RealVector singular_values(const HermitianMatrix& h) {
  RealVector s = spectral_decompose(h).eigenvalues.cwiseAbs();
  std::sort(s.data(), s.data() + s.size(), std::greater<>());
  return s;
}

/// (sum sigma_i^q)^(1/q) from a list of singular values; a quasi-norm for q < 1.
///
/// Values at or below n * eps * max(sigma) count as zero: for small q the
/// rounding residue of a zero singular value would otherwise contribute
/// (1e-16)^q, which is of order one.
inline double schatten_norm_from_singular_values(const RealVector& sigma, double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw Error(Errc::InvalidExponent, "Schatten exponent must be > 0");
  if (sigma.size() == 0) return 0.0;
  const double top = sigma.cwiseAbs().maxCoeff();
  if (top == 0.0) return 0.0;
  const double floor = static_cast<double>(sigma.size()) * std::numeric_limits<double>::epsilon();
  double acc = 0.0;
  for (Index i = 0; i < sigma.size(); ++i) {
    const double rel = std::abs(sigma(i)) / top;
    if (rel > floor) acc += std::pow(rel, q);
  }
  return top * std::pow(acc, 1.0 / q);
}

inline double schatten_norm(const ComplexMatrix& m, double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw Error(Errc::InvalidExponent, "Schatten exponent must be > 0");
  return schatten_norm_from_singular_values(singular_values(m), q);
}

inline double schatten_norm(const HermitianMatrix& h, double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw Error(Errc::InvalidExponent, "Schatten exponent must be > 0");
  return schatten_norm_from_singular_values(singular_values(h), q);
}

inline double trace_norm(const HermitianMatrix& h) { return schatten_norm(h, 1.0); }

}  // namespace qdist

#endif  // QDIST_SPECTRAL_HPP
