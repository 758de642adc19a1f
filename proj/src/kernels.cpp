#include "qframe/kernels.hpp"

#include <cstddef>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qframe/error.hpp"

namespace qframe::kernels {

namespace {

// Below this many output entries the fork/join cost dominates.
constexpr long kParallelThreshold = 256;

void check_matmul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "matmul " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

void check_gram(std::span<const QMatrix> members, std::size_t n) {
  for (const auto& m : members) {
    if (m.cols() != n) {
      throw Error(ErrorKind::DimensionMismatch, "gram_sum member with " + std::to_string(m.cols()) +
                                                    " columns, expected " + std::to_string(n));
    }
  }
}

inline Quaternion matmul_entry(const QMatrix& a, const QMatrix& b, std::size_t r, std::size_t c) {
  Quaternion s;
  for (std::size_t k = 0; k < a.cols(); ++k) s += a(r, k) * b(k, c);
  return s;
}

inline Quaternion gram_entry(std::span<const QMatrix> members, std::size_t r, std::size_t c) {
  Quaternion s;
  for (const auto& m : members) {
    for (std::size_t k = 0; k < m.rows(); ++k) s += conj(m(k, r)) * m(k, c);
  }
  return s;
}

inline Complex cmatmul_entry(const CMatrix& a, const CMatrix& b, std::size_t r, std::size_t c) {
  Complex s;
  for (std::size_t k = 0; k < a.cols(); ++k) s += a(r, k) * b(k, c);
  return s;
}

inline Complex synthesis_entry(const CMatrix& u, std::span<const double> w, std::size_t r,
                               std::size_t c) {
  Complex s;
  for (std::size_t k = 0; k < u.cols(); ++k) s += u(r, k) * w[k] * std::conj(u(c, k));
  return s;
}

// Fill the upper triangle, mirror the lower one with conjugates.
void mirror_lower(QMatrix& s) {
  const std::size_t n = s.rows();
  for (std::size_t r = 0; r < n; ++r) {
    s(r, r) = Quaternion(s(r, r).r0);
    for (std::size_t c = 0; c < r; ++c) s(r, c) = conj(s(c, r));
  }
}

void mirror_lower(CMatrix& s) {
  const std::size_t n = s.rows();
  for (std::size_t r = 0; r < n; ++r) {
    s(r, r) = Complex(s(r, r).real(), 0.0);
    for (std::size_t c = 0; c < r; ++c) s(r, c) = std::conj(s(c, r));
  }
}

}  // namespace

namespace serial {

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  check_matmul(a, b);
  QMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = matmul_entry(a, b, r, c);
  return out;
}

QVector matvec(const QMatrix& a, const QVector& u) {
  if (a.cols() != u.dim()) throw Error(ErrorKind::DimensionMismatch, "matvec");
  QVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Quaternion s;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(r, k) * u[k];
    out[r] = s;
  }
  return out;
}

QMatrix gram_sum(std::span<const QMatrix> members, std::size_t n) {
  check_gram(members, n);
  QMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) out(r, c) = gram_entry(members, r, c);
  mirror_lower(out);
  return out;
}

CMatrix cmatmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "cmatmul");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = cmatmul_entry(a, b, r, c);
  return out;
}

CMatrix spectral_synthesis(const CMatrix& u, std::span<const double> w) {
  if (u.cols() != w.size()) throw Error(ErrorKind::DimensionMismatch, "spectral_synthesis");
  const std::size_t n = u.rows();
  CMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) out(r, c) = synthesis_entry(u, w, r, c);
  mirror_lower(out);
  return out;
}

}  // namespace serial

namespace parallel {

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  check_matmul(a, b);
  QMatrix out(a.rows(), b.cols());
  const long rows = static_cast<long>(a.rows());
  const long cols = static_cast<long>(b.cols());
#pragma omp parallel for collapse(2) schedule(static) if (rows * cols >= kParallelThreshold)
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c)
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          matmul_entry(a, b, static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return out;
}

QVector matvec(const QMatrix& a, const QVector& u) {
  if (a.cols() != u.dim()) throw Error(ErrorKind::DimensionMismatch, "matvec");
  QVector out(a.rows());
  const long rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static) if (rows * static_cast<long>(a.cols()) >= 4 * kParallelThreshold)
  for (long r = 0; r < rows; ++r) {
    Quaternion s;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(static_cast<std::size_t>(r), k) * u[k];
    out[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

QMatrix gram_sum(std::span<const QMatrix> members, std::size_t n) {
  check_gram(members, n);
  QMatrix out(n, n);
  const long dim = static_cast<long>(n);
  // Triangular loop flattened so the schedule stays balanced.
  const long pairs = dim * (dim + 1) / 2;
#pragma omp parallel for schedule(static) if (pairs >= kParallelThreshold / 2)
  for (long p = 0; p < pairs; ++p) {
    long r = 0;
    long rem = p;
    while (rem >= dim - r) {
      rem -= dim - r;
      ++r;
    }
    const auto rr = static_cast<std::size_t>(r);
    const auto cc = static_cast<std::size_t>(r + rem);
    out(rr, cc) = gram_entry(members, rr, cc);
  }
  mirror_lower(out);
  return out;
}

CMatrix cmatmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "cmatmul");
  CMatrix out(a.rows(), b.cols());
  const long rows = static_cast<long>(a.rows());
  const long cols = static_cast<long>(b.cols());
#pragma omp parallel for collapse(2) schedule(static) if (rows * cols >= kParallelThreshold)
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c)
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          cmatmul_entry(a, b, static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return out;
}

CMatrix spectral_synthesis(const CMatrix& u, std::span<const double> w) {
  if (u.cols() != w.size()) throw Error(ErrorKind::DimensionMismatch, "spectral_synthesis");
  const long n = static_cast<long>(u.rows());
  CMatrix out(u.rows(), u.rows());
#pragma omp parallel for collapse(2) schedule(static) if (n * n >= kParallelThreshold)
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c)
      if (c >= r)
        out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
            synthesis_entry(u, w, static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  mirror_lower(out);
  return out;
}

}  // namespace parallel

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qframe::kernels
