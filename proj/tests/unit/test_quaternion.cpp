#include <random>

#include "helpers.hpp"
#include "qspec/error.hpp"
#include "qspec/quaternion.hpp"

using namespace qspec;
using namespace qspec::test;

TEST_CASE("Hamilton product on units") {
  CHECK(kI * kJ == kK);
  CHECK(kJ * kK == kI);
  CHECK(kK * kI == kJ);
  CHECK(kJ * kI == -kK);
  CHECK(kI * kI == -kOne);
  CHECK((kOne + kI) * (kOne + kJ) == Quaternion{1, 1, 1, 1});
  CHECK((kI * kJ).conj() == -kK);
  CHECK(kJ.conj() * kI.conj() == -kK);
}

TEST_CASE("product is associative and conj reverses order") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  for (int k = 0; k < 200; ++k) {
    const Quaternion a{n(rng), n(rng), n(rng), n(rng)}, b{n(rng), n(rng), n(rng), n(rng)},
        c{n(rng), n(rng), n(rng), n(rng)};
    CHECK(dist((a * b) * c, a * (b * c)) < 1e-13);
    CHECK(dist((a * b).conj(), b.conj() * a.conj()) < 1e-14);
    CHECK(dist(a.conj() * a, Quaternion{a.norm2()}) < 1e-13);
    CHECK(dist(a + a.conj(), Quaternion{2.0 * a.real()}) == 0.0);
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(kI) == -kI);
  CHECK(inverse(Quaternion{2}) == Quaternion{0.5});
  CHECK(dist(inverse(Quaternion{1, 1, 1, 1}), Quaternion{1, -1, -1, -1} / 4.0) < 1e-16);
  const Quaternion a{0.3, -1.2, 2.0, 0.7};
  CHECK(dist(a * inverse(a), kOne) < 1e-15);
  CHECK_THROWS_AS(inverse(Quaternion{}), Error);
  try {
    inverse(Quaternion{});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("sphere_of") {
  CHECK(sphere_of(Quaternion{1, 2, 2, 1}) == EigenSphere{1, 3, 1});
  CHECK(sphere_of(Quaternion{3}) == EigenSphere{3, 0, 1});
  const EigenSphere s = sphere_of(Quaternion{0, 1, 1, 0});
  CHECK(s.u == 0.0);
  CHECK(s.v == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(sphere_of(Quaternion{2, 1e-13, 0, 0}).is_real());
  CHECK_FALSE(sphere_of(Quaternion{2, 1e-13, 0, 0}, 0.0).is_real());
}

TEST_CASE("a quaternion is rebuilt from its sphere and unit") {
  const Quaternion q{0.4, -0.3, 0.5, 0.2};
  const EigenSphere s = sphere_of(q);
  const Quaternion unit = q.imag() / q.imag_abs();
  CHECK(dist(Quaternion{s.u} + s.v * unit, q) < 1e-15);
  CHECK(on_sphere(Quaternion{0.4, 0.0, 0.0, -s.v}, s, 1e-14));
}

TEST_CASE("exp_unit") {
  const UnitImaginary j = UnitImaginary::normalized(0, 1, 0);
  CHECK(dist(exp_unit(kUnitI, kPi / 2), kI) < 1e-16);
  CHECK(dist(exp_unit(j, kPi), -kOne) < 1e-15);
  CHECK(exp_unit(kUnitI, 0.0) == kOne);
  const UnitImaginary u = UnitImaginary::normalized(1, -2, 0.5);
  for (double t : {0.1, 1.3, 2.9, -4.0}) {
    CHECK(exp_unit(u, t).abs() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dist(exp_unit(u, t) * exp_unit(u, 0.7), exp_unit(u, t + 0.7)) < 1e-14);
  }
}

TEST_CASE("unit imaginaries square to -1") {
  const UnitImaginary u = UnitImaginary::normalized(3, 4, 12);
  const Quaternion q = u.as_quaternion();
  CHECK(dist(q * q, -kOne) < 1e-15);
  CHECK_THROWS_AS(UnitImaginary::normalized(0, 0, 0), Error);
}

TEST_CASE("orthogonal_unit anticommutes and is deterministic") {
  const UnitImaginary units[] = {kUnitI, UnitImaginary::normalized(0, 1, 0),
                                 UnitImaginary::normalized(1, 1, 0)};
  for (const auto& i : units) {
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
      const UnitImaginary j = orthogonal_unit(i, seed);
      const Quaternion iq = i.as_quaternion(), jq = j.as_quaternion();
      CHECK(dist(iq * jq + jq * iq, Quaternion{}) < 1e-14);
      CHECK(dist(jq * jq, -kOne) < 1e-14);
      CHECK(orthogonal_unit(i, seed) == j);
    }
  }
}

TEST_CASE("frames are automorphisms") {
  const UnitImaginary i = UnitImaginary::normalized(1, 2, -1);
  const Frame f(i, orthogonal_unit(i, 5));
  CHECK_FALSE(f.is_standard());
  CHECK(Frame{}.is_standard());
  const Quaternion a{0.2, 1.0, -0.5, 0.3}, b{-1.1, 0.4, 0.9, 2.0};
  CHECK(dist(f.to_frame(a * b), f.to_frame(a) * f.to_frame(b)) < 1e-14);
  CHECK(dist(f.from_frame(f.to_frame(a)), a) < 1e-15);
  CHECK(dist(f.to_frame(kI), i.as_quaternion()) < 1e-15);
  CHECK_THROWS_AS(Frame(kUnitI, UnitImaginary::normalized(1, 1, 0)), Error);
}

TEST_CASE("embed places a complex number in the slice") {
  const UnitImaginary k = UnitImaginary::normalized(0, 0, 1);
  CHECK(embed({2.0, -3.0}, k) == Quaternion{2, 0, 0, -3});
  CHECK(SlicePoint{1.0, 2.0, kUnitI}.to_quaternion() == Quaternion{1, 2, 0, 0});
}
