#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "qframe/operator_frame.hpp"
#include "qframe/qtypes.hpp"
#include "qframe/vector_frame.hpp"

namespace qframe {

/// Every sampled check takes one of these explicitly; nothing reads ambient state.
using Rng = std::mt19937_64;

/// Components i.i.d. standard normal.
Quaternion random_quaternion(Rng& rng);
QVector random_vector(std::size_t n, Rng& rng);
/// Uniform on the unit sphere of H^n.
QVector random_unit_vector(std::size_t n, Rng& rng);
QMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);

struct RandomFrameShape {
  std::size_t min_dim = 2;
  std::size_t max_dim = 16;
  std::size_t min_members = 3;
  std::size_t max_members = 10;
  std::size_t max_codim = 4;
};

/// Random operator frame with mixed codomain dimensions. Redraws until
/// lambda_min(S) > 1e-3 lambda_max(S) so the result is a frame with moderate
/// condition number.
OperatorFrame random_operator_frame(Rng& rng, const RandomFrameShape& shape = {});
VectorFrame random_vector_frame(std::size_t n, std::size_t members, Rng& rng);

}  // namespace qframe
