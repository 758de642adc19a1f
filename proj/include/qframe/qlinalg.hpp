#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qframe/qtypes.hpp"

namespace qframe {

/// Eigenvalues below zero but above -kClampTolerance count as zero.
inline constexpr double kClampTolerance = 1e-10;
/// Relative self-adjointness tolerance accepted by the spectral routines.
inline constexpr double kHermitianTolerance = 1e-9;
/// Gram-Schmidt drops residuals shorter than this.
inline constexpr double kDependenceTolerance = 1e-10;
/// A pivot must exceed this fraction of ||A||_F.
inline constexpr double kSingularTolerance = 1e-12;

/// <u|v> = sum_k conj(u_k) v_k: conjugate-linear in u, right-linear in v.
Quaternion inner(const QVector& u, const QVector& v);

/// Conjugate transpose.
QMatrix adjoint(const QMatrix& a);

/// Solves A x = b by Gaussian elimination with partial pivoting.
/// Row operations multiply by pivot inverses on the left only, so the
/// elimination is valid over the non-commutative ring.
QVector solve(const QMatrix& a, const QVector& b);
QMatrix solve(const QMatrix& a, const QMatrix& b);
QMatrix inverse_matrix(const QMatrix& a);

/// chi(A) = [[A1, A2], [-conj(A2), conj(A1)]] for A = A1 + A2 j with
/// A1, A2 in span{1, i}. Multiplicative and compatible with adjoints.
CMatrix complex_adjoint_rep(const QMatrix& a);
/// Left inverse of complex_adjoint_rep; averages the redundant blocks.
QMatrix from_complex_adjoint_rep(const CMatrix& m);

/// Maps v = v1 + v2 j to [v1; -conj(v2)], so chi(A) phi(v) = phi(A v).
std::vector<Complex> complex_vector_rep(const QVector& v);
QVector from_complex_vector_rep(std::span<const Complex> x);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns, unitary
  int sweeps = 0;
};

/// Cyclic Jacobi for a complex Hermitian matrix. Stops once the off-diagonal
/// Frobenius norm falls below 1e-12 ||A||_F.
HermitianEigen jacobi_eigen(const CMatrix& a);

struct Spectrum {
  /// One entry per quaternionic eigenvector, ascending.
  std::vector<double> eigenvalues;
  /// Column k satisfies S v_k = v_k eigenvalues[k]; columns are orthonormal.
  QMatrix eigenvectors;
  /// Full spectrum of chi(S), each value appears twice.
  std::vector<double> complex_eigenvalues;

  [[nodiscard]] double min() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
  [[nodiscard]] double max() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
};

Spectrum hermitian_spectrum(const QMatrix& s);

/// f(S) by functional calculus on chi(S). Throws NotHermitian.
QMatrix hermitian_function(const QMatrix& s, const std::function<double(double)>& f);

/// Principal square root of a positive operator.
QMatrix positive_sqrt(const QMatrix& s);

/// Right-quaternionic Gram-Schmidt; dependent vectors are dropped.
std::vector<QVector> orthonormalize(std::span<const QVector> vs);

/// Orthogonal projection onto span(basis) inside H^dim.
QMatrix projection(std::span<const QVector> basis, std::size_t dim);

/// ||A - A*||_F.
double hermitian_defect(const QMatrix& a);

}  // namespace qframe
