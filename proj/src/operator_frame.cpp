#include "qframe/operator_frame.hpp"

#include <cmath>
#include <string>

#include "qframe/error.hpp"
#include "qframe/kernels.hpp"
#include "qframe/qlinalg.hpp"

namespace qframe {

namespace {

QMatrix require_frame_operator(const OperatorFrame& f) {
  QMatrix s = op_frame_operator(f);
  const double lower = s.rows() == 0 ? 0.0 : hermitian_spectrum(s).min();
  if (!(lower > kFrameThreshold)) {
    throw Error(ErrorKind::NotAFrame, "lambda_min(S) = " + std::to_string(lower));
  }
  return s;
}

OperatorFrame right_multiplied(const OperatorFrame& f, const QMatrix& m) {
  std::vector<QMatrix> members;
  members.reserve(f.size());
  for (const auto& t : f.members()) members.push_back(t * m);
  return {f.space_dim(), std::move(members)};
}

}  // namespace

OperatorFrame::OperatorFrame(std::size_t space_dim, std::vector<QMatrix> members)
    : space_dim_(space_dim), members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].cols() != space_dim_) {
      throw Error(ErrorKind::DimensionMismatch, "member " + std::to_string(i) + " has " +
                                                    std::to_string(members_[i].cols()) + " columns, expected " +
                                                    std::to_string(space_dim_));
    }
  }
}

std::vector<std::size_t> OperatorFrame::codomain_dims() const {
  std::vector<std::size_t> dims;
  dims.reserve(members_.size());
  for (const auto& m : members_) dims.push_back(m.rows());
  return dims;
}

double BlockVector::norm2() const {
  double s = 0.0;
  for (const auto& b : blocks) s += b.norm2();
  return s;
}

double BlockVector::norm() const { return std::sqrt(norm2()); }

OperatorFrame coordinate_functionals(std::size_t n) {
  std::vector<QMatrix> members;
  for (std::size_t k = 0; k < n; ++k) members.push_back(QMatrix::bra(QVector::basis(n, k)));
  return {n, std::move(members)};
}

OperatorFrame shifted_basis_op_frame(std::size_t n) {
  const VectorFrame u = shifted_basis_frame(n);
  std::vector<QMatrix> members;
  for (const auto& v : u.members()) members.push_back(QMatrix::bra(v));
  return {n, std::move(members)};
}

OperatorFrame shifted_basis_rank_one_op_frame(std::size_t n) { return rank_one_op_frame(shifted_basis_frame(n)); }

OperatorFrame rank_one_op_frame(const VectorFrame& f) {
  std::vector<QMatrix> members;
  members.reserve(f.size());
  for (const auto& v : f.members()) members.push_back(QMatrix::ket_bra(v, v));
  return {f.space_dim(), std::move(members)};
}

QMatrix op_frame_operator(const OperatorFrame& f) {
  return kernels::parallel::gram_sum(f.members(), f.space_dim());
}

FrameReport op_report(const OperatorFrame& f) {
  return make_report(op_frame_operator(f), f.size(), [&](std::size_t skip) {
    std::vector<QMatrix> rest;
    rest.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      if (i != skip) rest.push_back(f[i]);
    return kernels::parallel::gram_sum(rest, f.space_dim());
  });
}

BlockVector op_analysis(const OperatorFrame& f, const QVector& x) {
  if (x.dim() != f.space_dim()) throw Error(ErrorKind::DimensionMismatch, "op_analysis vector dimension");
  BlockVector out;
  out.blocks.reserve(f.size());
  for (const auto& t : f.members()) out.blocks.push_back(t * x);
  return out;
}

QVector op_synthesis(const OperatorFrame& f, const BlockVector& x) {
  if (x.blocks.size() != f.size()) throw Error(ErrorKind::DimensionMismatch, "op_synthesis block count");
  QVector out(f.space_dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (x.blocks[i].dim() != f[i].rows()) {
      throw Error(ErrorKind::DimensionMismatch, "op_synthesis block " + std::to_string(i) + " dimension");
    }
    out += adjoint(f[i]) * x.blocks[i];
  }
  return out;
}

InducedSequence induced_sequence(const OperatorFrame& f) {
  InducedSequence seq;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const QMatrix& t = f[i];
    for (std::size_t k = 0; k < t.rows(); ++k) {
      // T_i^* e_k is the conjugated k-th row of T_i.
      QVector x(f.space_dim());
      for (std::size_t c = 0; c < f.space_dim(); ++c) x[c] = conj(t(k, c));
      seq.vectors.push_back(std::move(x));
      seq.member.push_back(i);
      seq.basis_index.push_back(k);
    }
  }
  return seq;
}

OperatorFrame op_dual(const OperatorFrame& f) {
  return right_multiplied(f, inverse_matrix(require_frame_operator(f)));
}

OperatorFrame op_parseval(const OperatorFrame& f) {
  return right_multiplied(f, inverse_matrix(positive_sqrt(require_frame_operator(f))));
}

QVector reconstruct(const OperatorFrame& f, const OperatorFrame& g, const QVector& x) {
  if (f.size() != g.size() || f.space_dim() != g.space_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "reconstruct needs frames of equal length and space");
  }
  if (x.dim() != f.space_dim()) throw Error(ErrorKind::DimensionMismatch, "reconstruct vector dimension");
  QVector out(f.space_dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].rows() != g[i].rows()) {
      throw Error(ErrorKind::DimensionMismatch, "reconstruct member " + std::to_string(i) + " codomain");
    }
    out += adjoint(g[i]) * (f[i] * x);
  }
  return out;
}

OperatorFrame scaled(const OperatorFrame& f, double a) {
  std::vector<QMatrix> members;
  members.reserve(f.size());
  for (const auto& t : f.members()) members.push_back(t * a);
  return {f.space_dim(), std::move(members)};
}

}  // namespace qframe
