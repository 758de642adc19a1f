#pragma once

#include <cstddef>
#include <vector>

#include "qframe/frame_report.hpp"
#include "qframe/qtypes.hpp"
#include "qframe/vector_frame.hpp"

namespace qframe {

/// Finite family of right-linear operators T_i : H^n -> H^{d_i}; member i is a
/// d_i x n matrix.
class OperatorFrame {
 public:
  OperatorFrame() = default;
  /// Throws DimensionMismatch unless every member has `space_dim` columns.
  OperatorFrame(std::size_t space_dim, std::vector<QMatrix> members);

  [[nodiscard]] std::size_t space_dim() const { return space_dim_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] const std::vector<QMatrix>& members() const { return members_; }
  [[nodiscard]] const QMatrix& operator[](std::size_t i) const { return members_[i]; }
  /// Codomain dimensions d_i.
  [[nodiscard]] std::vector<std::size_t> codomain_dims() const;

 private:
  std::size_t space_dim_ = 0;
  std::vector<QMatrix> members_;
};

/// Element of the direct sum of the codomains.
struct BlockVector {
  std::vector<QVector> blocks;

  [[nodiscard]] double norm2() const;
  [[nodiscard]] double norm() const;
};

/// x_k^i = T_i^*(e_k^i), flattened in (member, basis index) order.
struct InducedSequence {
  std::vector<QVector> vectors;
  std::vector<std::size_t> member;
  std::vector<std::size_t> basis_index;

  [[nodiscard]] VectorFrame as_frame(std::size_t space_dim) const { return {space_dim, vectors}; }
};

/// Coordinate functionals T_i(u) = <z_i|u>, 1 x n each.
OperatorFrame coordinate_functionals(std::size_t n);
/// T_i(u) = u_i <u_i|u> for the shifted basis u = (z_1, z_1, z_2, ..., z_n),
/// with codomain [u_i] written in the basis {u_i} (1 x n members).
OperatorFrame shifted_basis_op_frame(std::size_t n);
/// Same operators written in ambient coordinates (n x n rank-one members).
OperatorFrame shifted_basis_rank_one_op_frame(std::size_t n);
/// Rank-one construction u_i <u_i|.> from a vector frame.
OperatorFrame rank_one_op_frame(const VectorFrame& f);

/// S = sum_i T_i^* T_i.
QMatrix op_frame_operator(const OperatorFrame& f);
FrameReport op_report(const OperatorFrame& f);
/// Blocks T_i(x).
BlockVector op_analysis(const OperatorFrame& f, const QVector& x);
/// sum_i T_i^*(x_i).
QVector op_synthesis(const OperatorFrame& f, const BlockVector& x);
InducedSequence induced_sequence(const OperatorFrame& f);
/// Canonical dual {T_i S^{-1}}. Throws NotAFrame.
OperatorFrame op_dual(const OperatorFrame& f);
/// {T_i S^{-1/2}} with S^{-1/2} = positive_sqrt(S)^{-1}. Throws NotAFrame.
OperatorFrame op_parseval(const OperatorFrame& f);
/// sum_i G_i^* F_i(x).
QVector reconstruct(const OperatorFrame& f, const OperatorFrame& g, const QVector& x);
/// Memberwise a * T_i.
OperatorFrame scaled(const OperatorFrame& f, double a);

}  // namespace qframe
