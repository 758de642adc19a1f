#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qframe/error.hpp"
#include "qframe/operator_frame.hpp"
#include "qframe/qlinalg.hpp"
#include "qframe/random.hpp"
#include "test_util.hpp"

namespace qframe {
namespace {

using testing::frobenius_diff;
using testing::max_abs_diff;

TEST(OperatorFrame, RejectsMismatchedColumns) {
  try {
    OperatorFrame f(3, {QMatrix(2, 3), QMatrix(1, 2)});
    FAIL() << "expected DimensionMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(OperatorFrame, CoordinateFunctionalsAreParseval) {
  for (std::size_t n : {1u, 4u, 9u}) {
    const FrameReport r = op_report(coordinate_functionals(n));
    EXPECT_NEAR(r.lower, 1.0, 1e-12);
    EXPECT_NEAR(r.upper, 1.0, 1e-12);
    EXPECT_TRUE(r.is_parseval);
    EXPECT_TRUE(r.is_exact);
  }
}

TEST(OperatorFrame, ShiftedBasisBothEncodings) {
  const FrameReport a = op_report(shifted_basis_op_frame(7));
  const FrameReport b = op_report(shifted_basis_rank_one_op_frame(7));
  EXPECT_NEAR(a.lower, 1.0, 1e-12);
  EXPECT_NEAR(a.upper, 2.0, 1e-12);
  EXPECT_EQ(a.frame_operator, b.frame_operator);
  EXPECT_EQ(a.classification(), "frame");
}

TEST(OperatorFrame, ZeroFamilyIsBesselWithZeroBounds) {
  const FrameReport r = op_report(OperatorFrame(3, {QMatrix(2, 3)}));
  EXPECT_EQ(r.lower, 0.0);
  EXPECT_EQ(r.upper, 0.0);
  EXPECT_FALSE(r.is_frame);
  EXPECT_THROW((void)op_dual(OperatorFrame(3, {QMatrix(2, 3)})), Error);
}

TEST(OperatorFrame, FrameOperatorAgainstColumnOracle) {
  Rng rng(50);
  for (int t = 0; t < 20; ++t) {
    const OperatorFrame f = random_operator_frame(rng);
    const QMatrix s = op_frame_operator(f);
    EXPECT_LT(max_abs_diff(s, oracle::frame_operator_by_columns(f.members(), f.space_dim())), 1e-12);
  }
}

TEST(OperatorFrame, BoundsAgainstPowerIterationOracle) {
  Rng rng(51);
  for (int t = 0; t < 5; ++t) {
    const OperatorFrame f = random_operator_frame(rng, {2, 6, 3, 6, 3});
    const FrameReport r = op_report(f);
    const auto [lo, hi] = oracle::extremal_eigenvalues(op_frame_operator(f));
    EXPECT_NEAR(r.upper, hi, 1e-7 * hi);
    EXPECT_NEAR(r.lower, lo, 1e-7 * hi);
  }
}

TEST(OperatorFrameProperty, FrameOperatorIsHermitianPositiveAndSandwiched) {
  Rng rng(52);
  for (int t = 0; t < 20; ++t) {
    const OperatorFrame f = random_operator_frame(rng);
    const FrameReport r = op_report(f);
    const QMatrix& s = r.frame_operator;
    EXPECT_LE(hermitian_defect(s), 1e-12 * s.frobenius_norm());
    EXPECT_GT(r.lower, 0.0);
    for (double l : hermitian_spectrum(s).eigenvalues) {
      EXPECT_GE(l, r.lower - 1e-9);
      EXPECT_LE(l, r.upper + 1e-9);
    }
    const QVector x = random_vector(f.space_dim(), rng);
    const double energy = op_analysis(f, x).norm2();
    EXPECT_NEAR(energy, inner(x, s * x).r0, 1e-10 * std::max(1.0, energy));
  }
}

TEST(OperatorFrame, AnalysisSynthesisAdjoint) {
  Rng rng(53);
  const OperatorFrame f = random_operator_frame(rng);
  const QVector x = random_vector(f.space_dim(), rng);
  BlockVector y;
  for (std::size_t d : f.codomain_dims()) y.blocks.push_back(random_vector(d, rng));
  const BlockVector tx = op_analysis(f, x);
  Quaternion lhs;
  for (std::size_t i = 0; i < f.size(); ++i) lhs += inner(tx.blocks[i], y.blocks[i]);
  EXPECT_LT(max_abs_diff(lhs, inner(x, op_synthesis(f, y))), 1e-11);
}

TEST(InducedSequence, CoordinateFunctionalsInduceStandardBasis) {
  const InducedSequence s = induced_sequence(coordinate_functionals(3));
  ASSERT_EQ(s.vectors.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(s.vectors[k], QVector::basis(3, k));
    EXPECT_EQ(s.member[k], k);
    EXPECT_EQ(s.basis_index[k], 0u);
  }
}

TEST(InducedSequence, CoefficientsMatchOperatorComponents) {
  // <x_k^i | u> is the k-th component of T_i u.
  Rng rng(54);
  const OperatorFrame f = random_operator_frame(rng);
  const InducedSequence s = induced_sequence(f);
  const QVector u = random_vector(f.space_dim(), rng);
  for (std::size_t m = 0; m < s.vectors.size(); ++m) {
    const Quaternion expected = (f[s.member[m]] * u)[s.basis_index[m]];
    EXPECT_LT(max_abs_diff(inner(s.vectors[m], u), expected), 1e-12);
  }
}

TEST(InducedSequenceProperty, SameBoundsAndFrameOperator) {
  Rng rng(55);
  for (int t = 0; t < 20; ++t) {
    const OperatorFrame f = random_operator_frame(rng);
    const VectorFrame v = induced_sequence(f).as_frame(f.space_dim());
    const FrameReport a = op_report(f);
    const FrameReport b = report(v);
    EXPECT_NEAR(a.lower, b.lower, 1e-10);
    EXPECT_NEAR(a.upper, b.upper, 1e-10);
    EXPECT_LT(max_abs_diff(a.frame_operator, b.frame_operator), 1e-12);
  }
}

TEST(InducedSequence, NonFrameStaysNonFrame) {
  const OperatorFrame f(3, {QMatrix::bra(QVector::basis(3, 0)), QMatrix::bra(QVector::basis(3, 1))});
  EXPECT_FALSE(op_report(f).is_frame);
  EXPECT_FALSE(report(induced_sequence(f).as_frame(3)).is_frame);
}

TEST(OpDual, ShiftedBasisBoundsAndInverseOperator) {
  const OperatorFrame f = shifted_basis_op_frame(7);
  const OperatorFrame d = op_dual(f);
  const FrameReport r = op_report(d);
  EXPECT_NEAR(r.lower, 0.5, 1e-9);
  EXPECT_NEAR(r.upper, 1.0, 1e-9);
  EXPECT_LT(frobenius_diff(r.frame_operator, inverse_matrix(op_frame_operator(f))), 1e-9);
}

TEST(OpDual, ParsevalIsSelfDual) {
  const OperatorFrame f = coordinate_functionals(5);
  EXPECT_LT(max_abs_diff(op_dual(f), f), 1e-12);
}

TEST(OpDualProperty, InvolutionAndReconstruction) {
  Rng rng(56);
  for (int t = 0; t < 20; ++t) {
    const OperatorFrame f = random_operator_frame(rng);
    const OperatorFrame d = op_dual(f);
    EXPECT_LT(max_abs_diff(op_dual(d), f), 1e-8);
    const FrameReport rf = op_report(f);
    const FrameReport rd = op_report(d);
    EXPECT_NEAR(rd.lower, 1.0 / rf.upper, 1e-9 / rf.lower);
    EXPECT_NEAR(rd.upper, 1.0 / rf.lower, 1e-9 / rf.lower);
    for (int k = 0; k < 5; ++k) {
      const QVector x = random_vector(f.space_dim(), rng);
      EXPECT_LT((reconstruct(f, d, x) - x).norm(), 1e-9 * x.norm());
      EXPECT_LT((reconstruct(d, f, x) - x).norm(), 1e-9 * x.norm());
    }
  }
}

TEST(OpParseval, ShiftedBasisWhitened) {
  const FrameReport r = op_report(op_parseval(shifted_basis_op_frame(7)));
  EXPECT_NEAR(r.lower, 1.0, 1e-9);
  EXPECT_NEAR(r.upper, 1.0, 1e-9);
  EXPECT_TRUE(r.is_parseval);
}

TEST(OpParsevalProperty, IdentityFrameOperatorAndIdempotence) {
  Rng rng(57);
  for (int t = 0; t < 20; ++t) {
    const OperatorFrame f = random_operator_frame(rng);
    const OperatorFrame p = op_parseval(f);
    EXPECT_LT(frobenius_diff(op_frame_operator(p), QMatrix::identity(f.space_dim())), 1e-9);
    EXPECT_LT(max_abs_diff(op_parseval(p), p), 1e-9);
  }
}

TEST(OpParseval, MatchesInverseSquareRootByFunctionalCalculus) {
  Rng rng(58);
  const OperatorFrame f = random_operator_frame(rng);
  const QMatrix w = hermitian_function(op_frame_operator(f), [](double l) { return 1.0 / std::sqrt(l); });
  const OperatorFrame p = op_parseval(f);
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_LT(frobenius_diff(p[i], f[i] * w), 1e-9 * f[i].frobenius_norm());
}

TEST(OperatorFrame, ScalingScalesBoundsQuadratically) {
  Rng rng(59);
  const OperatorFrame f = random_operator_frame(rng);
  const FrameReport a = op_report(f);
  const FrameReport b = op_report(scaled(f, 0.5));
  EXPECT_NEAR(b.lower, 0.25 * a.lower, 1e-12 * a.upper);
  EXPECT_NEAR(b.upper, 0.25 * a.upper, 1e-12 * a.upper);
}

TEST(OperatorFrame, RankOneConstructionMatchesUnitVectorFrame) {
  Rng rng(60);
  std::vector<QVector> units;
  for (int k = 0; k < 6; ++k) units.push_back(random_unit_vector(4, rng));
  const VectorFrame v(4, units);
  EXPECT_LT(max_abs_diff(op_frame_operator(rank_one_op_frame(v)), frame_operator(v)), 1e-12);
}

TEST(OperatorFrame, PartialSumsOfReconstructionApproachIdentity) {
  // The partial sums sum_{i<=m} T_i^* U_i x converge to x as m reaches the full family.
  const OperatorFrame f = shifted_basis_op_frame(6);
  const OperatorFrame d = op_dual(f);
  const QVector x{Quaternion(1, 2, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 3), Quaternion(-1.0),
                  Quaternion(0.5), Quaternion(0, 1, 1, 1)};
  double previous = x.norm();
  QVector partial(6);
  for (std::size_t i = 0; i < f.size(); ++i) {
    partial += adjoint(f[i]) * (d[i] * x);
    const double err = (partial - x).norm();
    EXPECT_LE(err, previous + 1e-12);
    previous = err;
  }
  EXPECT_LT(previous, 1e-12);
}

}  // namespace
}  // namespace qframe
