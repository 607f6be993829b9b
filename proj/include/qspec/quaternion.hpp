#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>

#include "qspec/tolerances.hpp"

namespace qspec {

/// s = w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  /// Embeds a complex number of C_i.
  static constexpr Quaternion from_complex(std::complex<double> c) {
    return {c.real(), c.imag(), 0.0, 0.0};
  }
  /// c1 + c2 j with c1, c2 in C_i.
  static constexpr Quaternion from_pair(std::complex<double> c1, std::complex<double> c2) {
    return {c1.real(), c1.imag(), c2.real(), c2.imag()};
  }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double abs() const { return std::sqrt(norm2()); }
  double imag_abs() const { return std::sqrt(x * x + y * y + z * z); }

  /// Components of the split q = c1 + c2 j.
  constexpr std::complex<double> c1() const { return {w, x}; }
  constexpr std::complex<double> c2() const { return {y, z}; }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Hamilton product.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

/// conj(a) / |a|^2; throws ErrorKind::Domain for a == 0.
Quaternion inverse(const Quaternion& a);

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

/// Largest absolute component difference.
double max_abs_diff(const Quaternion& a, const Quaternion& b);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// A point I of the unit sphere of imaginary quaternions.
class UnitImaginary {
 public:
  /// Defaults to i.
  constexpr UnitImaginary() = default;
  /// Normalizes (x, y, z); throws ErrorKind::Domain for the zero vector.
  static UnitImaginary normalized(double x, double y, double z);

  constexpr double x() const { return x_; }
  constexpr double y() const { return y_; }
  constexpr double z() const { return z_; }
  constexpr Quaternion as_quaternion() const { return {0.0, x_, y_, z_}; }

  constexpr bool operator==(const UnitImaginary&) const = default;

 private:
  constexpr UnitImaginary(double x, double y, double z) : x_(x), y_(y), z_(z) {}
  double x_ = 1.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

inline constexpr UnitImaginary kUnitI{};

/// u + I v in the slice C_I.
struct SlicePoint {
  double u = 0.0;
  double v = 0.0;
  UnitImaginary unit{};

  constexpr Quaternion to_quaternion() const {
    const Quaternion i = unit.as_quaternion();
    return {u, v * i.x, v * i.y, v * i.z};
  }
};

/// Embeds a complex number a + b·sqrt(-1) into C_I as a + b I.
constexpr Quaternion embed(std::complex<double> c, const UnitImaginary& unit) {
  return SlicePoint{c.real(), c.imag(), unit}.to_quaternion();
}

/// The 2-sphere [u + v S] with a multiplicity.
struct EigenSphere {
  double u = 0.0;
  double v = 0.0;
  int multiplicity = 1;

  constexpr bool is_real() const { return v == 0.0; }
  constexpr bool operator==(const EigenSphere&) const = default;
};

/// Distance between two spheres in the (u, v) half-plane.
inline double sphere_distance(const EigenSphere& a, const EigenSphere& b) {
  return std::hypot(a.u - b.u, a.v - b.v);
}

EigenSphere sphere_of(const Quaternion& q, double eps_real = default_tolerances.real);

/// True iff q lies on the sphere s within tol (in the (u, v) metric).
bool on_sphere(const Quaternion& q, const EigenSphere& s, double tol);

/// cos t + I sin t.
Quaternion exp_unit(const UnitImaginary& unit, double t);

/// A unit J orthogonal to I (so IJ = -JI), deterministic in seed.
UnitImaginary orthogonal_unit(const UnitImaginary& unit, std::uint64_t seed);

/// An orthonormal right-handed triple (I, J, K = IJ). The map
/// a + b i + c j + d k -> a + b I + c J + d K is an algebra automorphism of H.
class Frame {
 public:
  Frame() = default;
  /// Throws ErrorKind::Domain unless I and J are orthogonal within 1e-12.
  Frame(const UnitImaginary& i_unit, const UnitImaginary& j_unit);

  const UnitImaginary& I() const { return i_; }
  const UnitImaginary& J() const { return j_; }
  const UnitImaginary& K() const { return k_; }
  bool is_standard() const;

  /// Standard-frame coordinates -> this frame.
  Quaternion to_frame(const Quaternion& q) const;
  /// This frame -> standard-frame coordinates (inverse of to_frame).
  Quaternion from_frame(const Quaternion& q) const;

 private:
  UnitImaginary i_{};
  UnitImaginary j_ = UnitImaginary::normalized(0.0, 1.0, 0.0);
  UnitImaginary k_ = UnitImaginary::normalized(0.0, 0.0, 1.0);
};

}  // namespace qspec
