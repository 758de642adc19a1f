#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qframe/error.hpp"
#include "qframe/qlinalg.hpp"
#include "qframe/random.hpp"
#include "test_util.hpp"

namespace qframe {
namespace {

using testing::frobenius_diff;
using testing::max_abs_diff;

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();

QMatrix random_positive(std::size_t n, Rng& rng) {
  const QMatrix a = random_matrix(n, n, rng);
  return adjoint(a) * a;
}

TEST(Inner, Examples) {
  EXPECT_EQ(inner(QVector::basis(3, 0), QVector::basis(3, 1)), Quaternion());
  const QVector u{I, J};
  EXPECT_EQ(inner(u, u), Quaternion(2.0));
  EXPECT_THROW((void)inner(QVector(2), QVector(3)), Error);
}

TEST(Inner, RightLinearInSecondSlot) {
  Rng rng(10);
  for (int t = 0; t < 50; ++t) {
    const QVector u = random_vector(4, rng);
    const QVector v = random_vector(4, rng);
    const Quaternion q = random_quaternion(rng);
    EXPECT_LT(max_abs_diff(inner(u, v * q), inner(u, v) * q), 1e-12);
  }
}

TEST(InnerProperty, SesquilinearHermitianCauchySchwarz) {
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    const QVector u = random_vector(5, rng);
    const QVector v = random_vector(5, rng);
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    const double scale = u.norm() * v.norm() * modulus(p) * modulus(q);
    ASSERT_LT(max_abs_diff(inner(u * p, v * q), conj(p) * inner(u, v) * q), 1e-12 * std::max(1.0, scale));
    ASSERT_LT(max_abs_diff(inner(u, v), conj(inner(v, u))), 1e-12);
    const Quaternion uu = inner(u, u);
    ASSERT_LT(std::max({std::abs(uu.r1), std::abs(uu.r2), std::abs(uu.r3)}), 1e-14 * uu.r0);
    ASSERT_GE(uu.r0, 0.0);
    ASSERT_LE(modulus(inner(u, v)), u.norm() * v.norm() * (1 + 1e-12));
  }
}

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(QMatrix::identity(3)), QMatrix::identity(3));
  const QMatrix row(1, 2, {I, J});
  const QMatrix col = adjoint(row);
  ASSERT_EQ(col.rows(), 2u);
  ASSERT_EQ(col.cols(), 1u);
  EXPECT_EQ(col(0, 0), -I);
  EXPECT_EQ(col(1, 0), -J);
}

TEST(Adjoint, SatisfiesInnerProductIdentity) {
  Rng rng(12);
  const QMatrix a = random_matrix(3, 2, rng);
  const QMatrix as = adjoint(a);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const QVector u = random_vector(3, rng);
    const QVector v = random_vector(2, rng);
    worst = std::max(worst, modulus(inner(as * u, v) - inner(u, a * v)));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(Matrix, RightLinearity) {
  Rng rng(13);
  const QMatrix a = random_matrix(3, 4, rng);
  const QVector u = random_vector(4, rng);
  const Quaternion q = random_quaternion(rng);
  EXPECT_LT(max_abs_diff(a * (u * q), (a * u) * q), 1e-12);
}

TEST(Solve, IdentityAndDiagonal) {
  const QVector b{Quaternion(1, 2, 3, 4), Quaternion(-1, 0, 0.5, 2)};
  EXPECT_EQ(solve(QMatrix::identity(2), b), b);
  const QMatrix inv = inverse_matrix(QMatrix::diagonal({Quaternion(2.0), J}));
  EXPECT_LT(max_abs_diff(inv, QMatrix::diagonal({Quaternion(0.5), -J})), 1e-15);
}

TEST(Solve, RoundTripOnRandomWellConditioned) {
  Rng rng(14);
  for (int t = 0; t < 20; ++t) {
    QMatrix a = random_matrix(5, 5, rng);
    a += QMatrix::identity(5) * 6.0;
    const QMatrix inv = inverse_matrix(a);
    EXPECT_LT(frobenius_diff(a * inv, QMatrix::identity(5)), 1e-10);
    EXPECT_LT(frobenius_diff(inv * a, QMatrix::identity(5)), 1e-10);
    const QVector b = random_vector(5, rng);
    const QVector x = solve(a, b);
    EXPECT_LE((a * x - b).norm(), 1e-10 * b.norm());
  }
}

TEST(Solve, NeedsPivotingWithQuaternionEntries) {
  // Zero leading entry forces a row swap; off-diagonal j entries exercise non-commutativity.
  const QMatrix a(2, 2, {Quaternion(), J, I, Quaternion(1, 1, 0, 0)});
  const QVector b{Quaternion(0, 0, 0, 1), Quaternion(2.0)};
  const QVector x = solve(a, b);
  EXPECT_LT((a * x - b).norm(), 1e-14);
}

TEST(SolveProperty, RoundTripUpToConditionOneMillion) {
  Rng rng(15);
  for (int t = 0; t < 10; ++t) {
    // A = U D V with unitary U, V from orthonormalized random bases and spread 1..1e6.
    const std::size_t n = 6;
    std::vector<QVector> cols_u;
    std::vector<QVector> cols_v;
    for (std::size_t k = 0; k < n; ++k) {
      cols_u.push_back(random_vector(n, rng));
      cols_v.push_back(random_vector(n, rng));
    }
    const QMatrix u = QMatrix::from_columns(orthonormalize(cols_u), n);
    const QMatrix v = QMatrix::from_columns(orthonormalize(cols_v), n);
    std::vector<Quaternion> d;
    for (std::size_t k = 0; k < n; ++k) d.emplace_back(std::pow(10.0, 6.0 * static_cast<double>(k) / (n - 1)));
    const QMatrix a = u * QMatrix::diagonal(d) * adjoint(v);
    const QMatrix inv = inverse_matrix(a);
    EXPECT_LT(frobenius_diff(a * inv, QMatrix::identity(n)), 1e-10);
  }
}

TEST(Solve, SingularThrows) {
  const QMatrix a(2, 2, {Quaternion(1.0), J, Quaternion(1.0), J});
  try {
    (void)inverse_matrix(a);
    FAIL() << "expected Singular";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Singular);
  }
  EXPECT_THROW((void)inverse_matrix(QMatrix(2, 2)), Error);
  EXPECT_THROW((void)inverse_matrix(QMatrix(2, 3)), Error);
}

TEST(ComplexAdjointRep, Examples) {
  EXPECT_EQ(complex_adjoint_rep(QMatrix::identity(3)), CMatrix::identity(6));
  const CMatrix cj = complex_adjoint_rep(QMatrix::diagonal({J}));
  EXPECT_EQ(cj(0, 0), Complex(0.0));
  EXPECT_EQ(cj(0, 1), Complex(1.0));
  EXPECT_EQ(cj(1, 0), Complex(-1.0));
  EXPECT_EQ(cj(1, 1), Complex(0.0));
}

TEST(ComplexAdjointRepProperty, HomomorphismAndAdjoint) {
  Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    const QMatrix a = random_matrix(2, 3, rng);
    const QMatrix b = random_matrix(3, 2, rng);
    EXPECT_LT((complex_adjoint_rep(a * b) - complex_adjoint_rep(a) * complex_adjoint_rep(b)).frobenius_norm(), 1e-12);
    EXPECT_EQ(complex_adjoint_rep(adjoint(a)), complex_adjoint_rep(a).conj_transpose());
    EXPECT_EQ(from_complex_adjoint_rep(complex_adjoint_rep(a)), a);
  }
}

TEST(ComplexAdjointRep, VectorEmbeddingIntertwines) {
  Rng rng(17);
  const QMatrix a = random_matrix(3, 4, rng);
  const QVector v = random_vector(4, rng);
  const CMatrix ca = complex_adjoint_rep(a);
  const auto cv = complex_vector_rep(v);
  const auto cav = complex_vector_rep(a * v);
  for (std::size_t r = 0; r < ca.rows(); ++r) {
    Complex s;
    for (std::size_t c = 0; c < ca.cols(); ++c) s += ca(r, c) * cv[c];
    EXPECT_LT(std::abs(s - cav[r]), 1e-12);
  }
  EXPECT_EQ(from_complex_vector_rep(cv), v);
}

TEST(Jacobi, DiagonalizesComplexHermitian) {
  Rng rng(18);
  const QMatrix s = random_positive(5, rng);
  const CMatrix c = complex_adjoint_rep(s);
  const HermitianEigen eig = jacobi_eigen(c);
  ASSERT_EQ(eig.values.size(), 10u);
  EXPECT_TRUE(std::is_sorted(eig.values.begin(), eig.values.end()));
  std::vector<double> lambda = eig.values;
  CMatrix d(10, 10);
  for (std::size_t k = 0; k < 10; ++k) d(k, k) = lambda[k];
  const CMatrix rebuilt = eig.vectors * d * eig.vectors.conj_transpose();
  EXPECT_LT((rebuilt - c).frobenius_norm(), 1e-11 * c.frobenius_norm());
  EXPECT_LT((eig.vectors.conj_transpose() * eig.vectors - CMatrix::identity(10)).frobenius_norm(), 1e-12);
}

TEST(Spectrum, Examples) {
  const Spectrum d = hermitian_spectrum(QMatrix::diagonal({Quaternion(2.0), Quaternion(1.0), Quaternion(1.0)}));
  ASSERT_EQ(d.eigenvalues.size(), 3u);
  EXPECT_DOUBLE_EQ(d.eigenvalues[0], 1.0);
  EXPECT_DOUBLE_EQ(d.eigenvalues[1], 1.0);
  EXPECT_DOUBLE_EQ(d.eigenvalues[2], 2.0);
  const Spectrum id = hermitian_spectrum(QMatrix::identity(4));
  for (double l : id.eigenvalues) EXPECT_DOUBLE_EQ(l, 1.0);
}

TEST(Spectrum, RandomGramAgainstPowerIteration) {
  Rng rng(19);
  for (int t = 0; t < 10; ++t) {
    const QMatrix s = random_positive(4, rng);
    const Spectrum sp = hermitian_spectrum(s);
    for (double l : sp.eigenvalues) EXPECT_GE(l, -1e-10);
    const auto [lo, hi] = oracle::extremal_eigenvalues(s);
    EXPECT_NEAR(sp.max(), hi, 1e-6);
    EXPECT_NEAR(sp.min(), lo, 1e-6);
  }
}

TEST(Spectrum, EigenpairsAndPairing) {
  Rng rng(20);
  const QMatrix s = random_positive(6, rng);
  const Spectrum sp = hermitian_spectrum(s);
  ASSERT_EQ(sp.complex_eigenvalues.size(), 12u);
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_NEAR(sp.complex_eigenvalues[2 * k], sp.complex_eigenvalues[2 * k + 1], 1e-9);
    const QVector v = sp.eigenvectors.column(k);
    EXPECT_LE((s * v - v * sp.eigenvalues[k]).norm(), 1e-9 * s.frobenius_norm());
  }
  EXPECT_LT(frobenius_diff(adjoint(sp.eigenvectors) * sp.eigenvectors, QMatrix::identity(6)), 1e-10);
}

TEST(Spectrum, DegenerateEigenspaceGivesFullBasis) {
  // I + rank-one: eigenvalue 1 with quaternionic multiplicity 4.
  Rng rng(21);
  const QVector u = random_unit_vector(5, rng);
  const QMatrix s = QMatrix::identity(5) + QMatrix::ket_bra(u, u) * 3.0;
  const Spectrum sp = hermitian_spectrum(s);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(sp.eigenvalues[k], 1.0, 1e-12);
  EXPECT_NEAR(sp.eigenvalues[4], 4.0, 1e-12);
  EXPECT_LT(frobenius_diff(adjoint(sp.eigenvectors) * sp.eigenvectors, QMatrix::identity(5)), 1e-10);
}

TEST(Spectrum, NotHermitianThrows) {
  const QMatrix a(2, 2, {Quaternion(1.0), J, J, Quaternion(1.0)});  // a(1,0) should be -j
  try {
    (void)hermitian_spectrum(a);
    FAIL() << "expected NotHermitian";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
  }
}

TEST(PositiveSqrt, Examples) {
  EXPECT_LT(max_abs_diff(positive_sqrt(QMatrix::identity(3)), QMatrix::identity(3)), 1e-15);
  EXPECT_LT(max_abs_diff(positive_sqrt(QMatrix::diagonal({Quaternion(4.0), Quaternion(1.0)})),
                         QMatrix::diagonal({Quaternion(2.0), Quaternion(1.0)})),
            1e-15);
}

TEST(PositiveSqrt, RandomReconstruction) {
  Rng rng(22);
  for (int t = 0; t < 10; ++t) {
    const QMatrix s = random_positive(5, rng);
    const QMatrix r = positive_sqrt(s);
    EXPECT_LT(frobenius_diff(r * r, s) / s.frobenius_norm(), 1e-9);
    EXPECT_LT(hermitian_defect(r), 1e-12 * r.frobenius_norm());
    EXPECT_GE(hermitian_spectrum(r).min(), -1e-10);
  }
}

TEST(PositiveSqrtProperty, SqrtOfSquareIsIdentityOnPositive) {
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    const QMatrix r = positive_sqrt(random_positive(4, rng));
    EXPECT_LT(frobenius_diff(positive_sqrt(r * r), r), 1e-8);
  }
}

TEST(PositiveSqrt, ClampsRoundOffAndRejectsNegative) {
  QMatrix s = QMatrix::diagonal({Quaternion(1.0), Quaternion(-1e-12)});
  EXPECT_LT(max_abs_diff(positive_sqrt(s), QMatrix::diagonal({Quaternion(1.0), Quaternion()})), 1e-15);
  s(1, 1) = -1e-3;
  try {
    (void)positive_sqrt(s);
    FAIL() << "expected NotPositive";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPositive);
  }
}

TEST(HermitianFunction, InverseSqrtAgreesWithInverseOfSqrt) {
  Rng rng(24);
  const QMatrix s = random_positive(5, rng) + QMatrix::identity(5);
  const QMatrix a = hermitian_function(s, [](double l) { return 1.0 / std::sqrt(l); });
  const QMatrix b = inverse_matrix(positive_sqrt(s));
  EXPECT_LT(frobenius_diff(a, b), 1e-9 * b.frobenius_norm());
}

TEST(Orthonormalize, Examples) {
  const std::vector<QVector> e{QVector::basis(2, 0), QVector::basis(2, 1)};
  const auto same = orthonormalize(e);
  ASSERT_EQ(same.size(), 2u);
  EXPECT_EQ(same[0], e[0]);
  EXPECT_EQ(same[1], e[1]);

  const std::vector<QVector> dup{QVector::basis(2, 0), QVector::basis(2, 0)};
  ASSERT_EQ(orthonormalize(dup).size(), 1u);

  const std::vector<QVector> skew{QVector{Quaternion(1.0), Quaternion()}, QVector{Quaternion(1.0), Quaternion(1.0)}};
  const auto b = orthonormalize(skew);
  ASSERT_EQ(b.size(), 2u);
  const QMatrix m = QMatrix::from_columns(b, 2);
  EXPECT_LT(frobenius_diff(adjoint(m) * m, QMatrix::identity(2)), 1e-15);
  EXPECT_LT(max_abs_diff(b[1], QVector::basis(2, 1)), 1e-15);
}

TEST(Orthonormalize, QuaternionDependenceIsDropped) {
  Rng rng(25);
  const QVector u = random_vector(3, rng);
  const std::vector<QVector> vs{u, u * Quaternion(0.3, -1.0, 2.0, 0.5)};
  EXPECT_EQ(orthonormalize(vs).size(), 1u);
}

TEST(Projection, Examples) {
  const std::vector<QVector> e1{QVector::basis(2, 0)};
  EXPECT_EQ(projection(e1, 2), QMatrix::diagonal({Quaternion(1.0), Quaternion()}));
  const std::vector<QVector> full{QVector::basis(3, 0), QVector::basis(3, 1), QVector::basis(3, 2)};
  EXPECT_EQ(projection(full, 3), QMatrix::identity(3));
}

TEST(Projection, RandomSubspaceIsIdempotentSelfAdjoint) {
  Rng rng(26);
  const std::vector<QVector> basis{random_vector(4, rng), random_vector(4, rng)};
  const QMatrix p = projection(basis, 4);
  EXPECT_LT(frobenius_diff(p * p, p), 1e-12);
  EXPECT_EQ(hermitian_defect(p), 0.0);
  for (const auto& b : basis) EXPECT_LT((p * b - b).norm(), 1e-12 * b.norm());
}

}  // namespace
}  // namespace qframe
