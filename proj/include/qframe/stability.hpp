#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "qframe/operator_frame.hpp"

namespace qframe {

/// Constants of the two perturbation hypotheses. Theorem 1 uses
/// (lambda1, lambda2, mu); theorem 2 uses (lambda, mu).
struct PerturbationParams {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
};

struct StabilityVerdict {
  int theorem = 1;
  PerturbationParams params;
  bool hypothesis_ok = false;
  /// True when the hypothesis was decided exactly (lambda-terms zero) rather than by sampling.
  bool hypothesis_exact = false;
  /// Largest lhs - rhs seen over the sampled vectors (negative when all samples pass).
  double max_sampled_excess = 0.0;
  double predicted_lower = 0.0;
  double predicted_upper = 0.0;
  double measured_lower = 0.0;
  double measured_upper = 0.0;
  /// The predicted lower bound is a frame guarantee only when its base is positive.
  bool frame_guarantee = false;
  bool consistent = false;
  std::uint64_t seed = 0;
  std::string note;
};

inline constexpr double kStabilitySlack = 1e-9;
inline constexpr std::size_t kHypothesisSamples = 200;

/// lambda_max(sum_i (T_i - R_i)^* (T_i - R_i)). Throws DimensionMismatch.
double difference_gram_bound(const OperatorFrame& f, const OperatorFrame& r);

/// lambda1 = lambda2 = 0, mu = sqrt(difference_gram_bound): admissible for every x.
PerturbationParams fit_params_t1(const OperatorFrame& f, const OperatorFrame& r);
/// lambda = 0, mu = ||sum_i (T_i^* - R_i^*)||, the same operator norm.
PerturbationParams fit_params_t2(const OperatorFrame& f, const OperatorFrame& r);

/// (lower, upper) from the closed forms. The lower value is returned as
/// r1 * b * |b| with b the base of the square, so it is negative exactly when
/// no lower frame bound is claimed.
std::pair<double, double> predicted_bounds_t1(double r1, double r2, const PerturbationParams& p);
std::pair<double, double> predicted_bounds_t2(double r1, double r2, const PerturbationParams& p);

/// Throws InvalidParams (negative constants or lambda2 >= 1), NotAFrame, DimensionMismatch.
StabilityVerdict check_stability_t1(const OperatorFrame& f, const OperatorFrame& r, const PerturbationParams& p,
                                    std::uint64_t seed = 0);
/// Throws InvalidParams (negative constants), ConditionViolated
/// (lambda + mu / sqrt(r1) >= 1), NotAFrame, DimensionMismatch.
StabilityVerdict check_stability_t2(const OperatorFrame& f, const OperatorFrame& r, const PerturbationParams& p,
                                    std::uint64_t seed = 0);

}  // namespace qframe
