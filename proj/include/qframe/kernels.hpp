#pragma once

// Dense kernels behind the linear algebra. Each kernel has a serial reference
// and an OpenMP version. Every output entry is reduced by one thread in fixed
// ascending index order, so both versions produce bit-identical results for
// any thread count.

#include <span>

#include "qframe/qtypes.hpp"

namespace qframe::kernels {

namespace serial {

QMatrix matmul(const QMatrix& a, const QMatrix& b);
QVector matvec(const QMatrix& a, const QVector& u);
/// sum_i A_i^* A_i over members with a shared column count n. Exactly Hermitian.
QMatrix gram_sum(std::span<const QMatrix> members, std::size_t n);
CMatrix cmatmul(const CMatrix& a, const CMatrix& b);
/// U diag(w) U^H.
CMatrix spectral_synthesis(const CMatrix& u, std::span<const double> w);

}  // namespace serial

namespace parallel {

QMatrix matmul(const QMatrix& a, const QMatrix& b);
QVector matvec(const QMatrix& a, const QVector& u);
QMatrix gram_sum(std::span<const QMatrix> members, std::size_t n);
CMatrix cmatmul(const CMatrix& a, const CMatrix& b);
CMatrix spectral_synthesis(const CMatrix& u, std::span<const double> w);

}  // namespace parallel

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace qframe::kernels
