#include "helpers.hpp"
#include "qspec/error.hpp"
#include "qspec/random.hpp"

using namespace qspec;
using namespace qspec::test;
using C = std::complex<double>;

TEST_CASE("chi of scalar units") {
  CMatrix cj(2, 2), ci(2, 2), ck(2, 2);
  cj << 0, 1, -1, 0;
  ci << C(0, 1), 0, 0, C(0, -1);
  ck << 0, C(0, 1), C(0, 1), 0;
  CHECK(dist(chi(QMatrix{{kJ}}), cj) == 0.0);
  CHECK(dist(chi(QMatrix{{kI}}), ci) == 0.0);
  CHECK(dist(chi(QMatrix{{kI}}) * chi(QMatrix{{kJ}}), ck) == 0.0);
  CHECK(dist(chi(QMatrix{{kK}}), ck) == 0.0);
}

TEST_CASE("chi_inv") {
  CMatrix m(2, 2);
  m << 0, 1, -1, 0;
  CHECK(chi_inv(m) == QMatrix{{kJ}});
  m << 2, 0, 0, 2;
  CHECK(chi_inv(m) == QMatrix{{Quaternion{2}}});
  m << C(0, 1), 0, 0, C(0, 1);
  CHECK_THROWS_AS(chi_inv(m), Error);
  try {
    chi_inv(m);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInImage);
    CHECK(e.value() == doctest::Approx(2.0));
  }
  CHECK_THROWS_AS(chi_inv(CMatrix::Zero(3, 3)), Error);
}

TEST_CASE("chi is a homomorphism with an exact inverse") {
  QuaternionRng rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    const QMatrix a = rng.matrix(n), b = rng.matrix(n);
    CHECK(dist(chi(a * b), CMatrix(chi(a) * chi(b))) < 1e-12);
    CHECK(dist(chi(a + b), CMatrix(chi(a) + chi(b))) < 1e-14);
    CHECK(dist(chi(adjoint(a)), CMatrix(chi(a).adjoint())) == 0.0);
    CHECK(chi_inv(chi(a)) == a);
    CHECK(chi_symmetry_residual(chi(a)) == 0.0);
    const QMatrix c = rng.matrix(n);
    CHECK(dist((a * b) * c, a * (b * c)) < 1e-12);
  }
}

TEST_CASE("inner product") {
  CHECK(inner(QVector{kOne, Quaternion{}}, QVector{kOne, Quaternion{}}) == kOne);
  CHECK(inner(QVector{kJ}, QVector{kOne}) == kJ);
  CHECK(inner(QVector{kOne}, QVector{kJ}) == -kJ);
  QuaternionRng rng(4);
  for (int k = 0; k < 50; ++k) {
    const QVector x = rng.vector(4), y = rng.vector(4), z = rng.vector(4);
    const Quaternion a = rng.quaternion(), b = rng.quaternion();
    CHECK(dist(inner(x * a + y * b, z), inner(x, z) * a + inner(y, z) * b) < 1e-12);
    CHECK(dist(inner(x, y), inner(y, x).conj()) < 1e-13);
    const Quaternion xx = inner(x, x);
    CHECK(xx.imag_abs() < 1e-14);
    CHECK(xx.w > 0.0);
    CHECK(x.norm() == doctest::Approx(std::sqrt(xx.w)));
  }
}

TEST_CASE("adjoint") {
  CHECK(adjoint(QMatrix{{kI}}) == QMatrix{{-kI}});
  CHECK(adjoint(QMatrix{{Quaternion{}, kJ}, {Quaternion{}, Quaternion{}}}) ==
        QMatrix{{Quaternion{}, Quaternion{}}, {-kJ, Quaternion{}}});
  QuaternionRng rng(8);
  for (int k = 0; k < 100; ++k) {
    const QMatrix a = rng.matrix(3), b = rng.matrix(3);
    const QVector x = rng.vector(3), y = rng.vector(3);
    CHECK(dist(inner(a * x, y), inner(x, adjoint(a) * y)) < 1e-12);
    CHECK(dist(adjoint(a * b), adjoint(b) * adjoint(a)) < 1e-12);
  }
}

TEST_CASE("invert") {
  CHECK(dist(invert(QMatrix{{Quaternion{2}}}), QMatrix{{Quaternion{0.5}}}) < 1e-16);
  CHECK(dist(invert(QMatrix{{kI}}), QMatrix{{-kI}}) < 1e-16);
  const QMatrix a{{kOne, kJ}, {Quaternion{}, kOne}};
  const QMatrix expected{{kOne, -kJ}, {Quaternion{}, kOne}};
  CHECK(dist(invert(a), expected) < 1e-15);
  CHECK(dist(a * invert(a), QMatrix::identity(2)) < 1e-15);
  QuaternionRng rng(2);
  const QMatrix r = rng.matrix(5);
  CHECK(dist(r * invert(r), QMatrix::identity(5)) < 1e-10);
  try {
    invert(QMatrix{{kOne, kOne}, {kOne, kOne}});
    FAIL("expected a singular-matrix error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
    CHECK(e.value() > 1e12);
  }
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(QMatrix{{cis(kPi / 4)}}, 1e-12));
  CHECK(is_unitary(QMatrix{{Quaternion{}, kOne}, {kOne, Quaternion{}}}, 1e-12));
  CHECK_FALSE(is_unitary(QMatrix{{Quaternion{2}}}, 1e-12));
  const QMatrix u = random_unitary(5, 3);
  CHECK(is_unitary(u, 1e-12));
  const CMatrix c = chi(u);
  CHECK((c.adjoint() * c - CMatrix::Identity(10, 10)).norm() < 2e-12);
}

TEST_CASE("vec_chi") {
  const CVector a = vec_chi(QVector{kOne + kJ});
  CHECK(a(0) == C(1, 0));
  CHECK(a(1) == C(-1, 0));
  const CVector b = vec_chi(QVector{kI});
  CHECK(b(0) == C(0, 1));
  CHECK(b(1) == C(0, 0));
  const CVector c = vec_chi(QVector{kK});
  CHECK(c(0) == C(0, 0));
  CHECK(c(1) == C(0, 1));
  CHECK(vec_chi(QMatrix{{kJ}} * QVector{kK}).isApprox(chi(QMatrix{{kJ}}) * c));
  CHECK(vec_chi(QMatrix{{kI}} * QVector{kOne + kJ}).isApprox(chi(QMatrix{{kI}}) * a));
  QuaternionRng rng(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    const QMatrix m = rng.matrix(n);
    const QVector x = rng.vector(n);
    CHECK((vec_chi(m * x) - chi(m) * vec_chi(x)).norm() < 1e-12);
    CHECK(vec_chi_inv(vec_chi(x)) == x);
  }
}

TEST_CASE("power, operator norm and frames") {
  const QMatrix a{{kI}};
  CHECK(dist(power(a, 2), QMatrix{{-kOne}}) == 0.0);
  CHECK(power(a, 0) == QMatrix::identity(1));
  CHECK(operator_norm(QMatrix::diagonal({Quaternion{3}, kJ})) == doctest::Approx(3.0));
  const QMatrix u = random_unitary(3, 1);
  CHECK(operator_norm(u) == doctest::Approx(1.0).epsilon(1e-12));
  const UnitImaginary i = UnitImaginary::normalized(0, 1, 1);
  const Frame f(i, orthogonal_unit(i, 2));
  QuaternionRng rng(3);
  const QMatrix b = rng.matrix(3);
  CHECK(dist(to_frame(u * b, f), to_frame(u, f) * to_frame(b, f)) < 1e-12);
  CHECK(dist(from_frame(to_frame(b, f), f), b) < 1e-14);
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(check_dimension(0), Error);
  CHECK_THROWS_AS(check_dimension(65), Error);
  CHECK_NOTHROW(check_dimension(64));
  CHECK_THROWS_AS((QMatrix{{kOne, kOne}, {kOne}}), Error);
}
