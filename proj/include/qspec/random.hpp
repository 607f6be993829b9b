#pragma once

#include <cstdint>
#include <random>

#include "qspec/qmatrix.hpp"

namespace qspec {

/// Seeded source of random quaternions; four independent standard normals.
class QuaternionRng {
 public:
  explicit QuaternionRng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::uint64_t next_seed() { return engine_(); }

  Quaternion quaternion() { return {normal(), normal(), normal(), normal()}; }
  UnitImaginary unit() { return UnitImaginary::normalized(normal(), normal(), normal()); }
  QVector vector(std::size_t n);
  QMatrix matrix(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Gram process on the columns of a Gaussian quaternion matrix under the
/// right-module inner product. Throws ErrorKind::Dimension unless 1 <= n <= 64.
QMatrix random_unitary(std::size_t n, std::uint64_t seed);

/// A unitary with entries in C_i, so it maps the complex subspace to itself.
QMatrix random_complex_unitary(std::size_t n, std::uint64_t seed);

/// S diag(q_1..q_n) S^{-1} with eigen-spheres at least `min_gap` apart.
QMatrix random_diagonalizable(std::size_t n, std::uint64_t seed, double min_gap = 0.3);

}  // namespace qspec
