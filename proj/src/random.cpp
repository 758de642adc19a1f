#include "qframe/random.hpp"

#include "qframe/qlinalg.hpp"

namespace qframe {

namespace {

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Quaternion random_quaternion(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double a = g(rng);
  const double b = g(rng);
  const double c = g(rng);
  const double d = g(rng);
  return {a, b, c, d};
}

QVector random_vector(std::size_t n, Rng& rng) {
  QVector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = random_quaternion(rng);
  return v;
}

QVector random_unit_vector(std::size_t n, Rng& rng) {
  for (;;) {
    QVector v = random_vector(n, rng);
    const double len = v.norm();
    if (len > 1e-12) return v * (1.0 / len);
  }
}

QMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  QMatrix m(rows, cols);
  for (auto& q : m.data()) q = random_quaternion(rng);
  return m;
}

OperatorFrame random_operator_frame(Rng& rng, const RandomFrameShape& shape) {
  for (;;) {
    const std::size_t n = uniform_size(rng, shape.min_dim, shape.max_dim);
    const std::size_t m = uniform_size(rng, shape.min_members, shape.max_members);
    std::vector<QMatrix> members;
    std::size_t total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t d = uniform_size(rng, 1, shape.max_codim);
      total += d;
      members.push_back(random_matrix(d, n, rng));
    }
    if (total < n) continue;
    OperatorFrame f(n, std::move(members));
    const Spectrum s = hermitian_spectrum(op_frame_operator(f));
    if (s.min() > 1e-3 * s.max()) return f;
  }
}

VectorFrame random_vector_frame(std::size_t n, std::size_t members, Rng& rng) {
  std::vector<QVector> vs;
  vs.reserve(members);
  for (std::size_t i = 0; i < members; ++i) vs.push_back(random_vector(n, rng));
  return {n, std::move(vs)};
}

}  // namespace qframe
