#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qframe/frame_report.hpp"
#include "qframe/operator_frame.hpp"
#include "qframe/qtypes.hpp"

namespace qframe {

/// Weighted family of subspaces {(W_i, v_i)}; each W_i is given by a spanning
/// list that is orthonormalized on use.
struct FusionFrame {
  std::size_t space_dim = 0;
  std::vector<std::vector<QVector>> subspaces;
  std::vector<double> weights;
};

/// Analyzers {x_n}, synthesizers {x_n^*} and the subspace X on which
/// x = sum_n x_n^* <x_n|x> should hold.
struct PseudoFramePair {
  std::size_t space_dim = 0;
  std::vector<QVector> analyzers;
  std::vector<QVector> synthesizers;
  std::vector<QVector> subspace;
};

/// Optional right decomposition (W_0, {D_j}) fixing the targets W_j = D_j(W_0).
struct QuasiDecomposition {
  std::vector<QVector> base;  // spans W_0
  std::vector<QMatrix> maps;  // D_j, one per projector
};

struct QuasiProjectorSystem {
  std::size_t space_dim = 0;
  std::vector<QMatrix> projectors;
  std::optional<QuasiDecomposition> decomposition;
};

struct PseudoFrameVerdict {
  bool holds = false;
  double max_residual = 0.0;
  std::uint64_t seed = 0;
};

struct QuasiProjectorVerdict {
  bool resolution_ok = false;
  double resolution_defect = 0.0;  // ||sum P_j - I||_F
  double bessel_bound = 0.0;       // lambda_max(sum P_j^* P_j)
  bool self_adjoint = false;
  bool compatible = false;
  /// Every P_j maps into its target W_j (always true without a decomposition).
  bool ranges_ok = false;
};

inline constexpr double kResolutionTolerance = 1e-10;
inline constexpr double kPseudoTolerance = 1e-9;
/// x lies in W iff ||x - P_W x|| <= kMembershipTolerance ||x||.
inline constexpr double kMembershipTolerance = 1e-9;

/// The fusion example: W_1 = [z_1], W_i = [z_{i-1}] for i = 2..n+1, unit weights.
FusionFrame shifted_fusion_frame(std::size_t n);
/// x_i = z_i, x_i^* = z_{2i-1} for i = 1..ceil(n/2), subspace [z_1].
PseudoFramePair shifted_pseudo_pair(std::size_t n);
/// P_j = z_j <z_j|.>, with W_0 = H and D_j the j-th coordinate map.
QuasiProjectorSystem coordinate_quasi_projectors(std::size_t n);

/// Bounds of sum_i v_i^2 P_{W_i}. Throws InvalidWeight if some v_i <= 0.
FrameReport fusion_report(const FusionFrame& f);
/// sum_i v_i^2 P_{W_i}.
QMatrix fusion_operator(const FusionFrame& f);
/// Checks the reconstruction identity on every subspace basis vector and on 50
/// seeded random unit combinations of them.
PseudoFrameVerdict pseudo_frame_check(const PseudoFramePair& p, std::uint64_t seed = 0);
QuasiProjectorVerdict quasi_projector_check(const QuasiProjectorSystem& q);

/// Members v_i P_{W_i}.
OperatorFrame fusion_to_op_frame(const FusionFrame& f);
/// Members x -> <x_i|B y> written in an orthonormal basis B of X (1 x dim X).
/// Throws NotAFrameOnSubspace when the analyzers do not form a frame for X.
OperatorFrame pseudo_to_op_frame(const PseudoFramePair& p);
/// Members P_j. Throws HypothesisViolated unless the system is self-adjoint and
/// resolves the identity.
OperatorFrame quasi_to_op_frame(const QuasiProjectorSystem& q);

/// Report of the analyzers restricted to X; never throws for a degenerate X.
FrameReport pseudo_subspace_report(const PseudoFramePair& p);

/// x in span(basis) within kMembershipTolerance.
bool in_subspace(const QVector& x, std::span<const QVector> basis);

}  // namespace qframe
