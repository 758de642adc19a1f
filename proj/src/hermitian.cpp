#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qframe/error.hpp"
#include "qframe/kernels.hpp"
#include "qframe/qlinalg.hpp"

namespace qframe {

namespace {

constexpr double kJacobiTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Annihilates a(p, q) with the unitary U = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
// acting on coordinates p, q, where a(p, q) = |a(p, q)| e^{i phi}.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Complex g = a(p, q);
  const double mag = std::abs(g);
  const Complex phase = std::conj(g) / mag;  // e^{-i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex upp = c;
  const Complex upq = s;
  const Complex uqp = -s * phase;
  const Complex uqq = c * phase;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
}

void require_hermitian(const QMatrix& s) {
  if (s.rows() != s.cols()) throw Error(ErrorKind::DimensionMismatch, "spectrum of non-square matrix");
  const double defect = hermitian_defect(s);
  const double scale = s.frobenius_norm();
  if (defect > kHermitianTolerance * scale) {
    throw Error(ErrorKind::NotHermitian,
                "||S - S*||_F = " + std::to_string(defect) + " exceeds tolerance for ||S||_F = " +
                    std::to_string(scale));
  }
}

}  // namespace

HermitianEigen jacobi_eigen(const CMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorKind::DimensionMismatch, "jacobi_eigen of non-square matrix");
  const std::size_t n = input.rows();
  CMatrix a = input;
  // Work on the Hermitian part so the diagonal is exactly real.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = Complex(a(r, r).real(), 0.0);
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex h = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = h;
      a(c, r) = std::conj(h);
    }
  }
  CMatrix v = CMatrix::identity(n);
  const double scale = a.frobenius_norm();
  const double target = kJacobiTolerance * scale;

  int sweeps = 0;
  while (scale > 0.0 && off_diagonal_norm(a) > target) {
    if (sweeps == kMaxSweeps) {
      throw Error(ErrorKind::NotHermitian, "Jacobi iteration did not converge in " +
                                               std::to_string(kMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) > 0.0) rotate(a, v, p, q);
      }
    }
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  out.sweeps = sweeps;
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

Spectrum hermitian_spectrum(const QMatrix& s) {
  require_hermitian(s);
  const std::size_t n = s.rows();
  const HermitianEigen eig = jacobi_eigen(complex_adjoint_rep(s));

  // Each quaternionic eigenvector shows up as a pair of complex eigenvectors
  // (phi(v) and phi(v j)). Keep the ones that are new over the quaternions.
  std::vector<QVector> accepted;
  std::vector<double> values;
  std::vector<bool> used(2 * n, false);
  for (const double threshold : {0.5, 1e-3}) {
    for (std::size_t k = 0; k < 2 * n && accepted.size() < n; ++k) {
      if (used[k]) continue;
      std::vector<Complex> col(2 * n);
      for (std::size_t r = 0; r < 2 * n; ++r) col[r] = eig.vectors(r, k);
      QVector v = from_complex_vector_rep(col);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : accepted) v -= b * inner(b, v);
      }
      const double len = v.norm();
      if (len <= threshold) continue;
      used[k] = true;
      accepted.push_back(v * (1.0 / len));
      values.push_back(eig.values[k]);
    }
  }
  if (accepted.size() != n) {
    throw Error(ErrorKind::NotHermitian, "could not recover " + std::to_string(n) +
                                             " quaternionic eigenvectors from the complex spectrum");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

  Spectrum out;
  out.eigenvalues.reserve(n);
  std::vector<QVector> cols;
  cols.reserve(n);
  for (const std::size_t k : order) {
    out.eigenvalues.push_back(values[k]);
    cols.push_back(accepted[k]);
  }
  out.eigenvectors = QMatrix::from_columns(cols, n);
  out.complex_eigenvalues = eig.values;
  return out;
}

QMatrix hermitian_function(const QMatrix& s, const std::function<double(double)>& f) {
  require_hermitian(s);
  const HermitianEigen eig = jacobi_eigen(complex_adjoint_rep(s));
  std::vector<double> w(eig.values.size());
  std::transform(eig.values.begin(), eig.values.end(), w.begin(), f);
  return from_complex_adjoint_rep(kernels::parallel::spectral_synthesis(eig.vectors, w));
}

QMatrix positive_sqrt(const QMatrix& s) {
  require_hermitian(s);
  const HermitianEigen eig = jacobi_eigen(complex_adjoint_rep(s));
  std::vector<double> w(eig.values.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double lambda = eig.values[k];
    if (lambda < -kClampTolerance) {
      throw Error(ErrorKind::NotPositive, "eigenvalue " + std::to_string(lambda) + " is negative");
    }
    w[k] = std::sqrt(std::max(lambda, 0.0));
  }
  return from_complex_adjoint_rep(kernels::parallel::spectral_synthesis(eig.vectors, w));
}

}  // namespace qframe
