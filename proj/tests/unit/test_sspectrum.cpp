#include "helpers.hpp"
#include "qspec/error.hpp"
#include "qspec/random.hpp"
#include "qspec/sspectrum.hpp"

using namespace qspec;
using namespace qspec::test;

TEST_CASE("S-spectrum oracles") {
  const SSpectrum real = s_spectrum(QMatrix::diagonal({Quaternion{2}, Quaternion{3}}));
  REQUIRE(real.spheres.size() == 2);
  CHECK(real.spheres[0].u == doctest::Approx(2.0));
  CHECK(real.spheres[0].v == 0.0);
  CHECK(real.spheres[0].multiplicity == 1);
  CHECK(real.spheres[1].u == doctest::Approx(3.0));

  // i and j lie on the same sphere
  const SSpectrum ij = s_spectrum(QMatrix::diagonal({kI, kJ}));
  REQUIRE(ij.spheres.size() == 1);
  CHECK(std::abs(ij.spheres[0].u) < 1e-12);
  CHECK(ij.spheres[0].v == doctest::Approx(1.0));
  CHECK(ij.spheres[0].multiplicity == 2);

  const SSpectrum rot = s_spectrum(QMatrix{{Quaternion{}, kOne}, {-kOne, Quaternion{}}});
  REQUIRE(rot.spheres.size() == 1);
  CHECK(rot.spheres[0].v == doctest::Approx(1.0));
  CHECK(rot.spheres[0].multiplicity == 2);
}

TEST_CASE("multiplicities add up and spheres are separated") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const QMatrix a = random_diagonalizable(5, seed);
    const SSpectrum s = s_spectrum(a);
    CHECK(s.total_multiplicity() == 5);
    CHECK(s.source_dim == 5);
    CHECK(s.min_gap() > 1e-8);
  }
}

TEST_CASE("unitary spectra lie on the unit sphere") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    for (const auto& s : s_spectrum(random_unitary(1 + seed % 6, seed)).spheres)
      CHECK(std::abs(s.u * s.u + s.v * s.v - 1.0) < 1e-10);
}

TEST_CASE("left resolvent oracles") {
  const QMatrix a = QMatrix::diagonal({Quaternion{0.5}, kI});
  const QMatrix expected = invert(QMatrix::identity(2) * Quaternion{2} - a);
  CHECK(dist(s_resolvent_left(Quaternion{2}, a), expected) < 1e-14);
  CHECK(dist(s_resolvent_left(Quaternion{2}, QMatrix{{kI}}), QMatrix{{Quaternion{2, 1} / 5.0}}) < 1e-15);
  CHECK(kind_of([] { s_resolvent_left(kI, QMatrix{{kI}}); }) == ErrorKind::ResolventSingularity);
  // every point of the sphere of i is singular
  CHECK(kind_of([] { s_resolvent_right(kK, QMatrix{{kI}}); }) == ErrorKind::ResolventSingularity);
}

TEST_CASE("right resolvent oracles") {
  QuaternionRng rng(5);
  const QMatrix a = rng.matrix(3);
  CHECK(dist(s_resolvent_right(Quaternion{7}, a), s_resolvent_left(Quaternion{7}, a)) < 1e-13);
  CHECK(dist(s_resolvent_right(Quaternion{2}, QMatrix{{kI}}), QMatrix{{Quaternion{2, 1} / 5.0}}) < 1e-15);
  const QMatrix h = a + adjoint(a);
  const QMatrix r = s_resolvent_right(Quaternion{9}, h);
  CHECK(dist(r, adjoint(r)) < 1e-13);
  CHECK(dist(r, s_resolvent_left(Quaternion{9}, h)) < 1e-13);
}

TEST_CASE("defining products and kernel consistency") {
  QuaternionRng rng(7);
  for (int k = 0; k < 20; ++k) {
    const QMatrix a = random_diagonalizable(4, 100 + k);
    const Quaternion s = rng.quaternion() * 2.0;
    if (s_spectrum(a).distance_to(s) < 0.1) continue;
    const ResolventSample smp = sample_resolvents(s, a);
    QMatrix shifted = a;
    for (std::size_t d = 0; d < 4; ++d) shifted(d, d) -= s.conj();
    const QMatrix q = characteristic(a, s);
    CHECK(dist(q * (-1.0 * smp.left), shifted) < 1e-10);
    CHECK(dist((-1.0 * smp.right) * q, shifted) < 1e-10);
  }
  for (int k = 0; k < 20; ++k) {
    const Quaternion s = rng.quaternion(), q = rng.quaternion();
    CHECK(dist(s_resolvent_left(s, QMatrix{{q}})(0, 0), cauchy_kernel_left(s, q)) < 1e-13);
    CHECK(dist(s_resolvent_right(s, QMatrix{{q}})(0, 0), cauchy_kernel_right(s, q)) < 1e-13);
  }
}

TEST_CASE("axial symmetry of the resolvent set") {
  const QMatrix a = random_diagonalizable(3, 42);
  QuaternionRng rng(1);
  for (const auto& sp : s_spectrum(a).spheres) {
    for (int k = 0; k < 16; ++k) {
      const Quaternion on = SlicePoint{sp.u, sp.v, rng.unit()}.to_quaternion();
      CHECK(kind_of([&] { s_resolvent_left(on, a); }) == ErrorKind::ResolventSingularity);
      const Quaternion off = SlicePoint{sp.u + 0.05, sp.v, rng.unit()}.to_quaternion();
      CHECK_NOTHROW(s_resolvent_left(off, a));
    }
  }
}

TEST_CASE("Cauchy kernel oracles") {
  // Direct evaluation gives (2 + i)/5 = (s - q)^{-1}; s and q commute.
  CHECK(dist(cauchy_kernel_left(Quaternion{2}, kI), Quaternion{2, 1} / 5.0) < 1e-15);
  CHECK(dist(cauchy_kernel_left(Quaternion{2}, kI), inverse(Quaternion{2} - kI)) < 1e-15);
  CHECK(dist(cauchy_kernel_left(2.0 * kI, kI), -kI) < 1e-15);
  CHECK(dist(cauchy_kernel_right(2.0 * kI, kI), -kI) < 1e-15);
  CHECK(kind_of([] { cauchy_kernel_left(kI, kJ); }) == ErrorKind::KernelSingularity);
  const UnitImaginary u = UnitImaginary::normalized(1, 2, 3);
  const Quaternion s = embed({0.3, 1.7}, u), q = embed({-0.4, 0.2}, u);
  CHECK(dist(cauchy_kernel_left(s, q), inverse(s - q)) < 1e-14);
  CHECK(dist(cauchy_kernel_right(s, q), inverse(s - q)) < 1e-14);
}

TEST_CASE("S-resolvent equation") {
  const auto zero = check_resolvent_equation(Quaternion{1}, Quaternion{2}, QMatrix(1));
  CHECK(zero.first_form < 1e-14);
  CHECK(zero.second_form < 1e-14);
  CHECK(zero.lhs_norm == doctest::Approx(0.5));

  QuaternionRng rng(17);
  for (int k = 0; k < 30; ++k) {
    const QMatrix u = random_unitary(3, 500 + k);
    // unitary spectra sit on |q| = 1; keep s and p well away from it
    const Quaternion s = rng.quaternion() * (rng.uniform(1.5, 2.5) / 2.0);
    const Quaternion p = rng.quaternion() * 0.2;
    if (std::abs(s.abs() - 1.0) < 0.2 || std::abs(p.abs() - 1.0) < 0.2) continue;
    if (sphere_distance(sphere_of(s), sphere_of(p)) < 0.05) continue;
    const auto r = check_resolvent_equation(s, p, u);
    CHECK(r.first_form < 1e-10);
    CHECK(r.second_form < 1e-10);
  }
  CHECK(kind_of([] { check_resolvent_equation(kI, kJ, QMatrix{{Quaternion{3}}}); }) ==
        ErrorKind::KernelSingularity);
  CHECK(kind_of([] { check_resolvent_equation(Quaternion{3}, kJ, QMatrix{{Quaternion{3}}}); }) ==
        ErrorKind::ResolventSingularity);
}
