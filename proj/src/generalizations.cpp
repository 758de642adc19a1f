#include "qframe/generalizations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qframe/error.hpp"
#include "qframe/kernels.hpp"
#include "qframe/qlinalg.hpp"
#include "qframe/random.hpp"

namespace qframe {

namespace {

constexpr std::size_t kPseudoSamples = 50;

void require_dims(const std::vector<QVector>& vs, std::size_t n, const char* what) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].dim() != n) {
      throw Error(ErrorKind::DimensionMismatch, std::string(what) + " " + std::to_string(i) + " has dimension " +
                                                    std::to_string(vs[i].dim()) + ", expected " + std::to_string(n));
    }
  }
}

void validate(const FusionFrame& f) {
  if (f.weights.size() != f.subspaces.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(f.weights.size()) + " weights for " +
                                                  std::to_string(f.subspaces.size()) + " subspaces");
  }
  for (std::size_t i = 0; i < f.weights.size(); ++i) {
    if (!(f.weights[i] > 0.0)) {
      throw Error(ErrorKind::InvalidWeight, "weight " + std::to_string(i) + " = " + std::to_string(f.weights[i]));
    }
    require_dims(f.subspaces[i], f.space_dim, "subspace vector");
  }
}

// v_i b^* for each orthonormal basis vector b of W_i, so that the Gram sum is
// sum_i v_i^2 P_i.
std::vector<QMatrix> fusion_rows(const FusionFrame& f, std::size_t skip) {
  std::vector<QMatrix> rows;
  for (std::size_t i = 0; i < f.subspaces.size(); ++i) {
    if (i == skip) continue;
    for (const auto& b : orthonormalize(f.subspaces[i])) rows.push_back(QMatrix::bra(b) * f.weights[i]);
  }
  return rows;
}

QVector pseudo_reconstruct(const PseudoFramePair& p, const QVector& x) {
  QVector out(p.space_dim);
  for (std::size_t i = 0; i < p.analyzers.size(); ++i) out += p.synthesizers[i] * inner(p.analyzers[i], x);
  return out;
}

void validate(const PseudoFramePair& p) {
  if (p.analyzers.size() != p.synthesizers.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(p.analyzers.size()) + " analyzers for " +
                                                  std::to_string(p.synthesizers.size()) + " synthesizers");
  }
  require_dims(p.analyzers, p.space_dim, "analyzer");
  require_dims(p.synthesizers, p.space_dim, "synthesizer");
  require_dims(p.subspace, p.space_dim, "subspace vector");
}

OperatorFrame subspace_functionals(const PseudoFramePair& p, const std::vector<QVector>& basis) {
  const QMatrix b = QMatrix::from_columns(basis, p.space_dim);
  std::vector<QMatrix> members;
  members.reserve(p.analyzers.size());
  for (const auto& x : p.analyzers) members.push_back(QMatrix::bra(x) * b);
  return {basis.size(), std::move(members)};
}

void validate(const QuasiProjectorSystem& q) {
  for (std::size_t j = 0; j < q.projectors.size(); ++j) {
    const QMatrix& p = q.projectors[j];
    if (p.rows() != q.space_dim || p.cols() != q.space_dim) {
      throw Error(ErrorKind::DimensionMismatch, "projector " + std::to_string(j) + " is " + std::to_string(p.rows()) +
                                                    "x" + std::to_string(p.cols()));
    }
  }
  if (q.decomposition) {
    if (q.decomposition->maps.size() != q.projectors.size()) {
      throw Error(ErrorKind::DimensionMismatch, "decomposition needs one map per projector");
    }
    require_dims(q.decomposition->base, q.space_dim, "decomposition base vector");
    for (const auto& d : q.decomposition->maps) {
      if (d.rows() != q.space_dim || d.cols() != q.space_dim) {
        throw Error(ErrorKind::DimensionMismatch, "decomposition map shape");
      }
    }
  }
}

std::vector<QVector> target_basis(const QuasiProjectorSystem& q, std::size_t j) {
  std::vector<QVector> span;
  if (q.decomposition) {
    for (const auto& w : q.decomposition->base) span.push_back(q.decomposition->maps[j] * w);
  } else {
    for (std::size_t c = 0; c < q.space_dim; ++c) span.push_back(q.projectors[j].column(c));
  }
  return orthonormalize(span);
}

}  // namespace

FusionFrame shifted_fusion_frame(std::size_t n) {
  FusionFrame f;
  f.space_dim = n;
  if (n == 0) return f;
  f.subspaces.push_back({QVector::basis(n, 0)});
  for (std::size_t k = 0; k < n; ++k) f.subspaces.push_back({QVector::basis(n, k)});
  f.weights.assign(f.subspaces.size(), 1.0);
  return f;
}

PseudoFramePair shifted_pseudo_pair(std::size_t n) {
  PseudoFramePair p;
  p.space_dim = n;
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    p.analyzers.push_back(QVector::basis(n, i));
    p.synthesizers.push_back(QVector::basis(n, 2 * i));
  }
  if (n > 0) p.subspace.push_back(QVector::basis(n, 0));
  return p;
}

QuasiProjectorSystem coordinate_quasi_projectors(std::size_t n) {
  QuasiProjectorSystem q;
  q.space_dim = n;
  QuasiDecomposition d;
  for (std::size_t j = 0; j < n; ++j) {
    const QVector z = QVector::basis(n, j);
    q.projectors.push_back(QMatrix::ket_bra(z, z));
    d.base.push_back(z);
    d.maps.push_back(QMatrix::ket_bra(z, z));
  }
  q.decomposition = std::move(d);
  return q;
}

QMatrix fusion_operator(const FusionFrame& f) {
  validate(f);
  return kernels::parallel::gram_sum(fusion_rows(f, static_cast<std::size_t>(-1)), f.space_dim);
}

FrameReport fusion_report(const FusionFrame& f) {
  return make_report(fusion_operator(f), f.subspaces.size(), [&](std::size_t skip) {
    return kernels::parallel::gram_sum(fusion_rows(f, skip), f.space_dim);
  });
}

PseudoFrameVerdict pseudo_frame_check(const PseudoFramePair& p, std::uint64_t seed) {
  validate(p);
  PseudoFrameVerdict verdict;
  verdict.seed = seed;
  const auto basis = orthonormalize(p.subspace);
  auto track = [&](const QVector& x) {
    verdict.max_residual = std::max(verdict.max_residual, (pseudo_reconstruct(p, x) - x).norm());
  };
  for (const auto& b : basis) track(b);
  if (!basis.empty()) {
    Rng rng(seed);
    for (std::size_t s = 0; s < kPseudoSamples; ++s) {
      QVector x(p.space_dim);
      for (const auto& b : basis) x += b * random_quaternion(rng);
      const double len = x.norm();
      if (len > 0.0) track(x * (1.0 / len));
    }
  }
  verdict.holds = verdict.max_residual <= kPseudoTolerance;
  return verdict;
}

QuasiProjectorVerdict quasi_projector_check(const QuasiProjectorSystem& q) {
  validate(q);
  QuasiProjectorVerdict v;
  QMatrix sum(q.space_dim, q.space_dim);
  for (const auto& p : q.projectors) sum += p;
  v.resolution_defect = (sum - QMatrix::identity(q.space_dim)).frobenius_norm();
  v.resolution_ok = v.resolution_defect <= kResolutionTolerance;
  v.bessel_bound =
      q.space_dim == 0 ? 0.0 : clamp_eigenvalue(hermitian_spectrum(kernels::parallel::gram_sum(q.projectors, q.space_dim)).max());

  v.self_adjoint = true;
  v.compatible = true;
  v.ranges_ok = true;
  for (std::size_t j = 0; j < q.projectors.size(); ++j) {
    const QMatrix& p = q.projectors[j];
    const double scale = std::max(1.0, p.frobenius_norm());
    if (hermitian_defect(p) > kResolutionTolerance * scale) v.self_adjoint = false;
    const auto target = target_basis(q, j);
    const QMatrix pi = projection(target, q.space_dim);
    if ((p * pi - p).frobenius_norm() > kResolutionTolerance * scale) v.compatible = false;
    if (q.decomposition) {
      for (std::size_t c = 0; c < q.space_dim; ++c) {
        if (!in_subspace(p.column(c), target)) v.ranges_ok = false;
      }
    }
  }
  return v;
}

OperatorFrame fusion_to_op_frame(const FusionFrame& f) {
  validate(f);
  std::vector<QMatrix> members;
  members.reserve(f.subspaces.size());
  for (std::size_t i = 0; i < f.subspaces.size(); ++i) {
    members.push_back(projection(f.subspaces[i], f.space_dim) * f.weights[i]);
  }
  return {f.space_dim, std::move(members)};
}

FrameReport pseudo_subspace_report(const PseudoFramePair& p) {
  validate(p);
  const auto basis = orthonormalize(p.subspace);
  if (basis.empty()) return FrameReport{};
  return op_report(subspace_functionals(p, basis));
}

OperatorFrame pseudo_to_op_frame(const PseudoFramePair& p) {
  validate(p);
  const auto basis = orthonormalize(p.subspace);
  if (basis.empty()) throw Error(ErrorKind::NotAFrameOnSubspace, "subspace is trivial");
  OperatorFrame f = subspace_functionals(p, basis);
  const double lower = hermitian_spectrum(op_frame_operator(f)).min();
  if (!(lower > kFrameThreshold)) {
    throw Error(ErrorKind::NotAFrameOnSubspace, "lambda_min on the subspace = " + std::to_string(lower));
  }
  return f;
}

OperatorFrame quasi_to_op_frame(const QuasiProjectorSystem& q) {
  const QuasiProjectorVerdict v = quasi_projector_check(q);
  if (!v.self_adjoint) throw Error(ErrorKind::HypothesisViolated, "projectors are not self-adjoint");
  if (!v.resolution_ok) {
    throw Error(ErrorKind::HypothesisViolated,
                "||sum P_j - I||_F = " + std::to_string(v.resolution_defect) + " is not a resolution of identity");
  }
  return {q.space_dim, q.projectors};
}

bool in_subspace(const QVector& x, std::span<const QVector> basis) {
  const QMatrix p = projection(basis, x.dim());
  return (x - p * x).norm() <= kMembershipTolerance * x.norm();
}

}  // namespace qframe
