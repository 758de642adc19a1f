#include "qframe/qtypes.hpp"

#include <cmath>
#include <string>

#include "qframe/kernels.hpp"

namespace qframe {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

double QVector::norm() const { return std::sqrt(norm2()); }

QVector& QVector::operator+=(const QVector& v) {
  require_same_dim(dim(), v.dim(), "vector add");
  for (std::size_t k = 0; k < dim(); ++k) entries_[k] += v[k];
  return *this;
}

QVector& QVector::operator-=(const QVector& v) {
  require_same_dim(dim(), v.dim(), "vector subtract");
  for (std::size_t k = 0; k < dim(); ++k) entries_[k] -= v[k];
  return *this;
}

QVector operator+(QVector a, const QVector& b) { return a += b; }
QVector operator-(QVector a, const QVector& b) { return a -= b; }

QVector operator*(const QVector& u, const Quaternion& q) {
  QVector out(u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) out[k] = u[k] * q;
  return out;
}

QVector operator*(const QVector& u, double s) {
  QVector out(u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) out[k] = u[k] * s;
  return out;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require_same_dim(data_.size(), rows * cols, "matrix data size");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

QMatrix QMatrix::from_columns(std::span<const QVector> columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_same_dim(columns[c].dim(), rows, "matrix column");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QMatrix QMatrix::bra(const QVector& u) {
  QMatrix m(1, u.dim());
  for (std::size_t c = 0; c < u.dim(); ++c) m(0, c) = conj(u[c]);
  return m;
}

QMatrix QMatrix::ket_bra(const QVector& u, const QVector& v) {
  QMatrix m(u.dim(), v.dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < v.dim(); ++c) m(r, c) = u[r] * conj(v[c]);
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QVector QMatrix::row(std::size_t r) const {
  QVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

double QMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& q : data_) s += q.norm2();
  return std::sqrt(s);
}

QMatrix& QMatrix::operator+=(const QMatrix& m) {
  require_same_dim(rows_, m.rows_, "matrix add rows");
  require_same_dim(cols_, m.cols_, "matrix add cols");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += m.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& m) {
  require_same_dim(rows_, m.rows_, "matrix subtract rows");
  require_same_dim(cols_, m.cols_, "matrix subtract cols");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= m.data_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(double s) {
  for (auto& q : data_) q *= s;
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }
QMatrix operator*(const QMatrix& a, const QMatrix& b) { return kernels::parallel::matmul(a, b); }
QVector operator*(const QMatrix& a, const QVector& u) { return kernels::parallel::matvec(a, u); }

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
  return m;
}

CMatrix CMatrix::conj_transpose() const {
  CMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.rows(), b.rows(), "complex subtract rows");
  require_same_dim(a.cols(), b.cols(), "complex subtract cols");
  CMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) { return kernels::parallel::cmatmul(a, b); }

}  // namespace qframe
