#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qframe/quaternion.hpp"

namespace qframe {

using Complex = std::complex<double>;

/// Element of the right quaternionic space H^n. Scalars act on the right.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : entries_(n) {}
  explicit QVector(std::vector<Quaternion> entries) : entries_(std::move(entries)) {}
  QVector(std::initializer_list<Quaternion> entries) : entries_(entries) {}

  static QVector basis(std::size_t n, std::size_t k) {
    QVector e(n);
    e[k] = 1.0;
    return e;
  }

  [[nodiscard]] std::size_t dim() const { return entries_.size(); }
  Quaternion& operator[](std::size_t k) { return entries_[k]; }
  const Quaternion& operator[](std::size_t k) const { return entries_[k]; }
  [[nodiscard]] std::span<const Quaternion> entries() const { return entries_; }
  [[nodiscard]] std::span<Quaternion> entries() { return entries_; }

  [[nodiscard]] double norm2() const {
    double s = 0.0;
    for (const auto& q : entries_) s += q.norm2();
    return s;
  }
  [[nodiscard]] double norm() const;

  QVector& operator+=(const QVector& v);
  QVector& operator-=(const QVector& v);

  friend bool operator==(const QVector&, const QVector&) = default;

 private:
  std::vector<Quaternion> entries_;
};

QVector operator+(QVector a, const QVector& b);
QVector operator-(QVector a, const QVector& b);
/// Right scalar action u -> u q.
QVector operator*(const QVector& u, const Quaternion& q);
QVector operator*(const QVector& u, double s);

/// Right-linear operator H^cols -> H^rows, dense row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> data);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Quaternion> d);
  static QMatrix diagonal(std::initializer_list<Quaternion> d) {
    return diagonal(std::span<const Quaternion>(d.begin(), d.size()));
  }
  static QMatrix from_columns(std::span<const QVector> columns, std::size_t rows);
  /// Row operator u* (1 x n), i.e. the functional x -> <u|x>.
  static QMatrix bra(const QVector& u);
  /// Rank-one operator u <u|.>.
  static QMatrix ket_bra(const QVector& u, const QVector& v);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  [[nodiscard]] std::span<const Quaternion> data() const { return data_; }
  [[nodiscard]] std::span<Quaternion> data() { return data_; }

  [[nodiscard]] QVector column(std::size_t c) const;
  [[nodiscard]] QVector row(std::size_t r) const;
  [[nodiscard]] double frobenius_norm() const;

  QMatrix& operator+=(const QMatrix& m);
  QMatrix& operator-=(const QMatrix& m);
  QMatrix& operator*=(double s);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(QMatrix a, double s);
QMatrix operator*(double s, QMatrix a);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& u);

/// Dense complex matrix, row-major. Used for the complex adjoint representation.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  [[nodiscard]] std::span<const Complex> data() const { return data_; }

  [[nodiscard]] CMatrix conj_transpose() const;
  [[nodiscard]] double frobenius_norm() const;

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

}  // namespace qframe
