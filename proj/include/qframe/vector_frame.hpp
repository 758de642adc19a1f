#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qframe/frame_report.hpp"
#include "qframe/qtypes.hpp"

namespace qframe {

/// Finite family {u_i} in H^n.
class VectorFrame {
 public:
  VectorFrame() = default;
  /// Throws DimensionMismatch unless every member lives in H^space_dim.
  VectorFrame(std::size_t space_dim, std::vector<QVector> members);

  [[nodiscard]] std::size_t space_dim() const { return space_dim_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] const std::vector<QVector>& members() const { return members_; }
  [[nodiscard]] const QVector& operator[](std::size_t i) const { return members_[i]; }

 private:
  std::size_t space_dim_ = 0;
  std::vector<QVector> members_;
};

/// Orthonormal basis {z_1, ..., z_n}.
VectorFrame standard_basis_frame(std::size_t n);
/// {z_1, z_1, z_2, ..., z_n}: n + 1 members in H^n, optimal bounds (1, 2).
VectorFrame shifted_basis_frame(std::size_t n);

/// sum_i u_i q_i.
QVector synthesis(const VectorFrame& f, std::span<const Quaternion> coeffs);
/// {<u_i|u>}_i.
std::vector<Quaternion> analysis(const VectorFrame& f, const QVector& u);
/// S = sum_i u_i <u_i|.>.
QMatrix frame_operator(const VectorFrame& f);
FrameReport report(const VectorFrame& f);
/// {S^{-1} u_i}. Throws NotAFrame.
VectorFrame canonical_dual(const VectorFrame& f);
/// {S^{-1/2} u_i}, a Parseval frame. Throws NotAFrame.
VectorFrame parseval(const VectorFrame& f);

}  // namespace qframe
