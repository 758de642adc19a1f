#include "qframe/qlinalg.hpp"

#include <cmath>
#include <string>

#include "qframe/error.hpp"
#include "qframe/kernels.hpp"

namespace qframe {

Quaternion inner(const QVector& u, const QVector& v) {
  if (u.dim() != v.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "inner product of dims " + std::to_string(u.dim()) + " and " + std::to_string(v.dim()));
  }
  Quaternion s;
  for (std::size_t k = 0; k < u.dim(); ++k) s += conj(u[k]) * v[k];
  return s;
}

QMatrix adjoint(const QMatrix& a) {
  QMatrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = conj(a(r, c));
  return t;
}

double hermitian_defect(const QMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "hermitian_defect of non-square matrix");
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s += (a(r, c) - conj(a(c, r))).norm2();
  return std::sqrt(s);
}

QMatrix solve(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::DimensionMismatch, "solve needs a square matrix");
  if (b.rows() != n) throw Error(ErrorKind::DimensionMismatch, "solve right-hand side rows");
  const double guard = kSingularTolerance * a.frobenius_norm();
  QMatrix m = a;
  QMatrix x = b;
  const std::size_t k = b.cols();

  for (std::size_t p = 0; p < n; ++p) {
    std::size_t best = p;
    double best_mod = modulus(m(p, p));
    for (std::size_t r = p + 1; r < n; ++r) {
      const double mod = modulus(m(r, p));
      if (mod > best_mod) {
        best = r;
        best_mod = mod;
      }
    }
    if (!(best_mod > guard)) {
      throw Error(ErrorKind::Singular, "no pivot above " + std::to_string(guard) + " in column " +
                                           std::to_string(p));
    }
    if (best != p) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(best, c));
      for (std::size_t c = 0; c < k; ++c) std::swap(x(p, c), x(best, c));
    }
    const Quaternion pivot_inv = inverse(m(p, p));
    for (std::size_t r = p + 1; r < n; ++r) {
      const Quaternion f = m(r, p) * pivot_inv;
      if (f == Quaternion{}) continue;
      m(r, p) = Quaternion{};
      for (std::size_t c = p + 1; c < n; ++c) m(r, c) -= f * m(p, c);
      for (std::size_t c = 0; c < k; ++c) x(r, c) -= f * x(p, c);
    }
  }

  for (std::size_t p = n; p-- > 0;) {
    const Quaternion pivot_inv = inverse(m(p, p));
    for (std::size_t c = 0; c < k; ++c) {
      Quaternion s = x(p, c);
      for (std::size_t j = p + 1; j < n; ++j) s -= m(p, j) * x(j, c);
      x(p, c) = pivot_inv * s;
    }
  }
  return x;
}

QVector solve(const QMatrix& a, const QVector& b) {
  if (b.dim() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "solve right-hand side");
  std::vector<QVector> cols{b};
  return solve(a, QMatrix::from_columns(cols, b.dim())).column(0);
}

QMatrix inverse_matrix(const QMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  return solve(a, QMatrix::identity(a.rows()));
}

CMatrix complex_adjoint_rep(const QMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  CMatrix out(2 * m, 2 * n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Quaternion& q = a(r, c);
      const Complex a1(q.r0, q.r1);
      const Complex a2(q.r2, q.r3);
      out(r, c) = a1;
      out(r, n + c) = a2;
      out(m + r, c) = -std::conj(a2);
      out(m + r, n + c) = std::conj(a1);
    }
  }
  return out;
}

QMatrix from_complex_adjoint_rep(const CMatrix& mat) {
  if (mat.rows() % 2 != 0 || mat.cols() % 2 != 0) {
    throw Error(ErrorKind::DimensionMismatch, "complex adjoint representation needs even dimensions");
  }
  const std::size_t m = mat.rows() / 2;
  const std::size_t n = mat.cols() / 2;
  QMatrix out(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Complex a1 = 0.5 * (mat(r, c) + std::conj(mat(m + r, n + c)));
      const Complex a2 = 0.5 * (mat(r, n + c) - std::conj(mat(m + r, c)));
      out(r, c) = Quaternion(a1.real(), a1.imag(), a2.real(), a2.imag());
    }
  }
  return out;
}

std::vector<Complex> complex_vector_rep(const QVector& v) {
  const std::size_t n = v.dim();
  std::vector<Complex> out(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = Complex(v[k].r0, v[k].r1);
    out[n + k] = -std::conj(Complex(v[k].r2, v[k].r3));
  }
  return out;
}

QVector from_complex_vector_rep(std::span<const Complex> x) {
  if (x.size() % 2 != 0) throw Error(ErrorKind::DimensionMismatch, "complex vector of odd length");
  const std::size_t n = x.size() / 2;
  QVector v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex v2 = -std::conj(x[n + k]);
    v[k] = Quaternion(x[k].real(), x[k].imag(), v2.real(), v2.imag());
  }
  return v;
}

std::vector<QVector> orthonormalize(std::span<const QVector> vs) {
  std::vector<QVector> basis;
  for (const auto& v : vs) {
    QVector r = v;
    // Two passes of modified Gram-Schmidt keep the output orthogonal to round-off.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) r -= b * inner(b, r);
    }
    const double len = r.norm();
    if (len < kDependenceTolerance) continue;
    basis.push_back(r * (1.0 / len));
  }
  return basis;
}

QMatrix projection(std::span<const QVector> basis, std::size_t dim) {
  for (const auto& b : basis) {
    if (b.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "projection basis vector dimension");
  }
  const auto ortho = orthonormalize(basis);
  std::vector<QMatrix> bras;
  bras.reserve(ortho.size());
  for (const auto& b : ortho) bras.push_back(QMatrix::bra(b));
  return kernels::parallel::gram_sum(bras, dim);
}

}  // namespace qframe
