#include "qspec/random.hpp"

#include <vector>

#include "qspec/error.hpp"

namespace qspec {

QVector QuaternionRng::vector(std::size_t n) {
  QVector x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = quaternion();
  return x;
}

QMatrix QuaternionRng::matrix(std::size_t n) {
  QMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = quaternion();
  return a;
}

namespace {

QMatrix orthonormalize(std::vector<QVector> cols) {
  const std::size_t n = cols.size();
  for (std::size_t c = 0; c < n; ++c) {
    // Two passes keep the columns orthogonal to working precision.
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t p = 0; p < c; ++p) cols[c] = cols[c] - cols[p] * inner(cols[c], cols[p]);
    const double norm = cols[c].norm();
    if (!(norm > 1e-8)) throw Error(ErrorKind::Singular, "Gram process met a dependent column");
    cols[c] = cols[c] * Quaternion{1.0 / norm};
  }
  QMatrix u(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) u(r, c) = cols[c][r];
  return u;
}

}  // namespace

QMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  check_dimension(n);
  QuaternionRng rng(seed);
  std::vector<QVector> cols;
  for (std::size_t c = 0; c < n; ++c) cols.push_back(rng.vector(n));
  return orthonormalize(std::move(cols));
}

QMatrix random_complex_unitary(std::size_t n, std::uint64_t seed) {
  check_dimension(n);
  QuaternionRng rng(seed);
  std::vector<QVector> cols;
  for (std::size_t c = 0; c < n; ++c) {
    QVector v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = {rng.normal(), rng.normal(), 0.0, 0.0};
    cols.push_back(std::move(v));
  }
  return orthonormalize(std::move(cols));
}

QMatrix random_diagonalizable(std::size_t n, std::uint64_t seed, double min_gap) {
  check_dimension(n);
  QuaternionRng rng(seed);
  std::vector<Quaternion> diag;
  std::vector<EigenSphere> spheres;
  while (diag.size() < n) {
    const EigenSphere s{rng.uniform(-1.5, 1.5), rng.uniform(0.0, 1.5), 1};
    const EigenSphere candidate{s.u, s.v < 0.2 ? 0.0 : s.v, 1};
    bool ok = true;
    for (const auto& t : spheres) ok = ok && sphere_distance(candidate, t) >= min_gap;
    if (!ok) continue;
    spheres.push_back(candidate);
    diag.push_back(SlicePoint{candidate.u, candidate.v, rng.unit()}.to_quaternion());
  }
  for (;;) {
    const QMatrix s = rng.matrix(n);
    try {
      const QMatrix s_inv = invert(s, 1e-3);
      return s * QMatrix::diagonal(diag) * s_inv;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Singular) throw;
    }
  }
}

}  // namespace qspec
