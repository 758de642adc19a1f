#include "qframe/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qframe/error.hpp"
#include "qframe/kernels.hpp"
#include "qframe/qlinalg.hpp"
#include "qframe/random.hpp"

namespace qframe {

namespace {

void require_compatible(const OperatorFrame& f, const OperatorFrame& r) {
  if (f.space_dim() != r.space_dim() || f.size() != r.size()) {
    throw Error(ErrorKind::DimensionMismatch, "perturbed family must match the frame's space and length");
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].rows() != r[i].rows()) {
      throw Error(ErrorKind::DimensionMismatch, "member " + std::to_string(i) + " codomain differs");
    }
  }
}

void require_nonnegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidParams, std::string(name) + " = " + std::to_string(v) + " must be >= 0");
  }
}

std::vector<QMatrix> differences(const OperatorFrame& f, const OperatorFrame& r) {
  std::vector<QMatrix> d;
  d.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) d.push_back(f[i] - r[i]);
  return d;
}

// b * |b|: keeps the sign of the base through the square.
double signed_square(double b) { return b * std::abs(b); }

double sum_norm(const OperatorFrame& f, const QVector& x) { return op_analysis(f, x).norm(); }

double excess_beyond_slack(double lhs, double rhs) { return lhs - rhs - kStabilitySlack * std::max(1.0, rhs); }

struct FrameBounds {
  double lower;
  double upper;
};

FrameBounds require_frame(const OperatorFrame& f) {
  const FrameReport rep = op_report(f);
  if (!rep.is_frame) throw Error(ErrorKind::NotAFrame, "unperturbed family has lambda_min = " + std::to_string(rep.lower));
  return {rep.lower, rep.upper};
}

void finish(StabilityVerdict& v, const OperatorFrame& r) {
  const FrameReport measured = op_report(r);
  v.measured_lower = measured.lower;
  v.measured_upper = measured.upper;
  const bool upper_ok = v.measured_upper <= v.predicted_upper + kStabilitySlack;
  const bool lower_ok = !v.frame_guarantee || v.measured_lower >= v.predicted_lower - kStabilitySlack;
  v.consistent = upper_ok && lower_ok;
}

}  // namespace

double difference_gram_bound(const OperatorFrame& f, const OperatorFrame& r) {
  require_compatible(f, r);
  if (f.space_dim() == 0) return 0.0;
  const auto d = differences(f, r);
  return clamp_eigenvalue(hermitian_spectrum(kernels::parallel::gram_sum(d, f.space_dim())).max());
}

PerturbationParams fit_params_t1(const OperatorFrame& f, const OperatorFrame& r) {
  PerturbationParams p;
  p.mu = std::sqrt(std::max(0.0, difference_gram_bound(f, r)));
  return p;
}

PerturbationParams fit_params_t2(const OperatorFrame& f, const OperatorFrame& r) { return fit_params_t1(f, r); }

std::pair<double, double> predicted_bounds_t1(double r1, double r2, const PerturbationParams& p) {
  const double a = p.lambda1 + p.lambda2 + p.mu / std::sqrt(r1);
  const double lower = r1 * signed_square(1.0 - a / (1.0 + p.lambda2));
  const double upper_base = 1.0 + a / (1.0 - p.lambda2);
  return {lower, r2 * upper_base * upper_base};
}

std::pair<double, double> predicted_bounds_t2(double r1, double r2, const PerturbationParams& p) {
  const double lower = r1 * signed_square(1.0 - (p.lambda + p.mu) / std::sqrt(r1));
  const double upper_base = 1.0 + (p.lambda + p.mu) / std::sqrt(r2);
  return {lower, r2 * upper_base * upper_base};
}

StabilityVerdict check_stability_t1(const OperatorFrame& f, const OperatorFrame& r, const PerturbationParams& p,
                                    std::uint64_t seed) {
  require_nonnegative(p.lambda1, "lambda1");
  require_nonnegative(p.lambda2, "lambda2");
  require_nonnegative(p.mu, "mu");
  if (!(p.lambda2 < 1.0)) throw Error(ErrorKind::InvalidParams, "lambda2 = " + std::to_string(p.lambda2) + " must be < 1");
  require_compatible(f, r);
  const FrameBounds bounds = require_frame(f);

  StabilityVerdict v;
  v.theorem = 1;
  v.params = p;
  v.seed = seed;
  std::tie(v.predicted_lower, v.predicted_upper) = predicted_bounds_t1(bounds.lower, bounds.upper, p);
  v.frame_guarantee = 1.0 - (p.lambda1 + p.lambda2 + p.mu / std::sqrt(bounds.lower)) / (1.0 + p.lambda2) > 0.0;

  Rng rng(seed);
  const OperatorFrame diff(f.space_dim(), differences(f, r));
  bool sampled_ok = true;
  v.max_sampled_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < kHypothesisSamples; ++s) {
    const QVector x = random_unit_vector(f.space_dim(), rng);
    const double lhs = sum_norm(diff, x);
    const double rhs = p.lambda1 * sum_norm(f, x) + p.lambda2 * sum_norm(r, x) + p.mu;
    v.max_sampled_excess = std::max(v.max_sampled_excess, lhs - rhs);
    if (excess_beyond_slack(lhs, rhs) > 0.0) sampled_ok = false;
  }

  if (p.lambda1 == 0.0 && p.lambda2 == 0.0) {
    const double top = std::sqrt(difference_gram_bound(f, r));
    v.hypothesis_exact = true;
    v.hypothesis_ok = excess_beyond_slack(top, p.mu) <= 0.0;
  } else {
    v.hypothesis_ok = sampled_ok;
  }
  finish(v, r);
  return v;
}

StabilityVerdict check_stability_t2(const OperatorFrame& f, const OperatorFrame& r, const PerturbationParams& p,
                                    std::uint64_t seed) {
  require_nonnegative(p.lambda, "lambda");
  require_nonnegative(p.mu, "mu");
  require_compatible(f, r);
  const FrameBounds bounds = require_frame(f);
  const double condition = p.lambda + p.mu / std::sqrt(bounds.lower);
  if (!(condition < 1.0)) {
    throw Error(ErrorKind::ConditionViolated, "lambda + mu/sqrt(r1) = " + std::to_string(condition) + " must be < 1");
  }

  StabilityVerdict v;
  v.theorem = 2;
  v.params = p;
  v.seed = seed;
  v.note = "hypothesis term read as mu * (sum ||x_i||^2)^(1/2)";
  std::tie(v.predicted_lower, v.predicted_upper) = predicted_bounds_t2(bounds.lower, bounds.upper, p);
  v.frame_guarantee = 1.0 - (p.lambda + p.mu) / std::sqrt(bounds.lower) > 0.0;

  Rng rng(seed);
  const OperatorFrame diff(f.space_dim(), differences(f, r));
  bool sampled_ok = true;
  v.max_sampled_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < kHypothesisSamples; ++s) {
    BlockVector c;
    for (const auto& t : f.members()) c.blocks.push_back(random_vector(t.rows(), rng));
    const double len = c.norm();
    if (len == 0.0) continue;
    for (auto& b : c.blocks) b = b * (1.0 / len);
    const double lhs = op_synthesis(diff, c).norm();
    const double rhs = p.lambda * op_synthesis(f, c).norm() + p.mu;
    v.max_sampled_excess = std::max(v.max_sampled_excess, lhs - rhs);
    if (excess_beyond_slack(lhs, rhs) > 0.0) sampled_ok = false;
  }

  if (p.lambda == 0.0) {
    // ||sum (T_i^* - R_i^*) x_i|| <= ||D|| ||x|| with ||D|| from the analysis side.
    const double top = std::sqrt(difference_gram_bound(f, r));
    v.hypothesis_exact = true;
    v.hypothesis_ok = excess_beyond_slack(top, p.mu) <= 0.0;
  } else {
    v.hypothesis_ok = sampled_ok;
  }
  finish(v, r);
  return v;
}

}  // namespace qframe
