#include "qframe/vector_frame.hpp"

#include <string>

#include "qframe/error.hpp"
#include "qframe/kernels.hpp"
#include "qframe/qlinalg.hpp"

namespace qframe {

namespace {

std::vector<QMatrix> bras(const VectorFrame& f, std::size_t skip = static_cast<std::size_t>(-1)) {
  std::vector<QMatrix> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i != skip) out.push_back(QMatrix::bra(f[i]));
  return out;
}

QMatrix require_frame_operator(const VectorFrame& f) {
  QMatrix s = frame_operator(f);
  const double lower = s.rows() == 0 ? 0.0 : hermitian_spectrum(s).min();
  if (!(lower > kFrameThreshold)) {
    throw Error(ErrorKind::NotAFrame, "lambda_min(S) = " + std::to_string(lower));
  }
  return s;
}

}  // namespace

VectorFrame::VectorFrame(std::size_t space_dim, std::vector<QVector> members)
    : space_dim_(space_dim), members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].dim() != space_dim_) {
      throw Error(ErrorKind::DimensionMismatch, "member " + std::to_string(i) + " has dimension " +
                                                    std::to_string(members_[i].dim()) + ", expected " +
                                                    std::to_string(space_dim_));
    }
  }
}

VectorFrame standard_basis_frame(std::size_t n) {
  std::vector<QVector> members;
  for (std::size_t k = 0; k < n; ++k) members.push_back(QVector::basis(n, k));
  return {n, std::move(members)};
}

VectorFrame shifted_basis_frame(std::size_t n) {
  std::vector<QVector> members;
  if (n > 0) members.push_back(QVector::basis(n, 0));
  for (std::size_t k = 0; k < n; ++k) members.push_back(QVector::basis(n, k));
  return {n, std::move(members)};
}

QVector synthesis(const VectorFrame& f, std::span<const Quaternion> coeffs) {
  if (coeffs.size() != f.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(coeffs.size()) + " coefficients for " +
                                                  std::to_string(f.size()) + " members");
  }
  QVector out(f.space_dim());
  for (std::size_t i = 0; i < f.size(); ++i) out += f[i] * coeffs[i];
  return out;
}

std::vector<Quaternion> analysis(const VectorFrame& f, const QVector& u) {
  if (u.dim() != f.space_dim()) throw Error(ErrorKind::DimensionMismatch, "analysis vector dimension");
  std::vector<Quaternion> out;
  out.reserve(f.size());
  for (const auto& m : f.members()) out.push_back(inner(m, u));
  return out;
}

QMatrix frame_operator(const VectorFrame& f) {
  return kernels::parallel::gram_sum(bras(f), f.space_dim());
}

FrameReport report(const VectorFrame& f) {
  return make_report(frame_operator(f), f.size(), [&](std::size_t i) {
    return kernels::parallel::gram_sum(bras(f, i), f.space_dim());
  });
}

VectorFrame canonical_dual(const VectorFrame& f) {
  const QMatrix s_inv = inverse_matrix(require_frame_operator(f));
  std::vector<QVector> members;
  members.reserve(f.size());
  for (const auto& u : f.members()) members.push_back(s_inv * u);
  return {f.space_dim(), std::move(members)};
}

VectorFrame parseval(const VectorFrame& f) {
  const QMatrix whitening = inverse_matrix(positive_sqrt(require_frame_operator(f)));
  std::vector<QVector> members;
  members.reserve(f.size());
  for (const auto& u : f.members()) members.push_back(whitening * u);
  return {f.space_dim(), std::move(members)};
}

}  // namespace qframe
